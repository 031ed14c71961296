use std::f64::consts::{PI, TAU};

use super::{Kernel, KernelSpec};
use crate::error::{check_finite, domain, Result};
use crate::zeta_core::PeriodicZeta;

/// `(b₀ + Re F(θ/2π, s)) / (b₀ + ζ(s))` with `s = 1 + 2ν` and `b₀ = a/2^{s+1}`.
///
/// The cosine coefficients `b₀, 1, 2^{-s}, 3^{-s}, …` satisfy the conditions
/// for a geodesic covariance on S³ exactly when `a >= 1`.
pub fn sphere_kernel(theta: f64, nu: f64, a: f64) -> Result<f64> {
    Kernel::new(KernelSpec::SphereZeta { nu, a })?.eval(theta)
}

/// Great-circle angle between two nonzero vectors of R⁴, in `[0, π]`.
///
/// Computed as `2 atan2(|û - v̂|, |û + v̂|)`, which keeps full accuracy near
/// `0` and `π` where `acos` of the dot product does not.
pub fn great_circle_angle(u: &[f64; 4], v: &[f64; 4]) -> Result<f64> {
    let unit = |w: &[f64; 4]| -> Result<[f64; 4]> {
        for &c in w {
            check_finite("sphere point", c)?;
        }
        let norm = w.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm == 0.0 {
            return domain("sphere point must be nonzero");
        }
        Ok(w.map(|c| c / norm))
    };
    let (u, v) = (unit(u)?, unit(v)?);
    let mut diff = 0.0;
    let mut sum = 0.0;
    for k in 0..4 {
        diff += (u[k] - v[k]).powi(2);
        sum += (u[k] + v[k]).powi(2);
    }
    Ok(2.0 * diff.sqrt().atan2(sum.sqrt()))
}

/// Distance along one great circle between two longitudes.
pub(crate) fn fold_angle(delta: f64) -> f64 {
    let d = delta.abs() % TAU;
    if d > PI {
        TAU - d
    } else {
        d
    }
}

/// Checks `b₂ <= 2 b₀` and `b_{n+2} <= b_n` for `1 <= n <= n_max` on the
/// coefficients `b₀ = a/2^{s+1}`, `b_n = n^{-s}`.
pub fn gneiting_conditions_hold(s: f64, a: f64, n_max: u32) -> bool {
    let b = |n: u32| f64::from(n).powf(-s);
    let b0 = 0.5 * a * b(2);
    b(2) <= 2.0 * b0 && (1..=n_max).all(|n| b(n + 2) <= b(n))
}

#[derive(Debug, Clone)]
pub(crate) struct SphereZetaKernel {
    eval: PeriodicZeta<'static>,
    b0: f64,
    norm: f64,
}

impl SphereZetaKernel {
    pub(crate) fn new(nu: f64, a: f64) -> Result<Self> {
        let s = 1.0 + 2.0 * nu;
        let eval = PeriodicZeta::with_defaults(s)?;
        let b0 = 0.5 * a * 2f64.powf(-s);
        let norm = b0 + eval.eval(0.0)?;
        Ok(SphereZetaKernel { eval, b0, norm })
    }

    pub(crate) fn eval(&self, theta: f64) -> Result<f64> {
        check_finite("theta", theta)?;
        if !(0.0..=PI).contains(&theta) {
            return domain(format!("theta must lie in [0, pi], got {theta}"));
        }
        if theta == 0.0 {
            return Ok(1.0);
        }
        Ok((self.b0 + self.eval.eval(theta / TAU)?) / self.norm)
    }
}
