use std::f64::consts::TAU;

use super::{Kernel, KernelSpec};
use crate::error::{check_finite, Result};
use crate::zeta_core::{pole_scaled_zeta, CoefficientTables, PeriodicZeta};

/// `Z_ν(x / period) = Re F(x / period, 1 + 2ν) / ζ(1 + 2ν)`.
///
/// At `nu = 0` this is periodic white noise: 1 on multiples of the period and
/// 0 elsewhere.
///
/// ```
/// use perzeta_core::kernels::z_nu;
/// assert!((z_nu(0.5, 0.5, 1.0).unwrap() + 0.5).abs() < 1e-14);
/// ```
pub fn z_nu(x: f64, nu: f64, period: f64) -> Result<f64> {
    Kernel::new(KernelSpec::PeriodicZeta { nu, period })?.eval(x)
}

/// `Cov[f'(x₁), f'(x₂)]` at lag `x` for a process with covariance `Z_ν`:
/// `(2π/period)² ζ(2ν-1)/ζ(2ν+1) · Z_{ν-1}(x/period)`.
pub fn z_nu_derivative_cov(x: f64, nu: f64, period: f64) -> Result<f64> {
    Kernel::new(KernelSpec::PeriodicZetaDerivative { nu, period })?.eval(x)
}

/// `x / period` reduced to `[0, 1)`, even in `x`.
///
/// The remainder is exact, so `x` and `x + period` give the same result
/// whenever both are representable.
pub(crate) fn unit_phase(x: f64, period: f64) -> Result<f64> {
    check_finite("x", x)?;
    let t = (x.abs() % period) / period;
    Ok(if t >= 1.0 { 0.0 } else { t })
}

#[derive(Debug, Clone)]
pub(crate) struct ZetaKernel {
    period: f64,
    // None for white noise.
    series: Option<(PeriodicZeta<'static>, f64)>,
}

impl ZetaKernel {
    pub(crate) fn new(nu: f64, period: f64) -> Result<Self> {
        if nu == 0.0 {
            return Ok(ZetaKernel {
                period,
                series: None,
            });
        }
        let d = 2.0 * nu;
        let eval = PeriodicZeta::with_defaults(1.0 + d)?;
        // Near the pole use d ζ(1+d) with the exact d, since 1 + d rounds.
        let inv_norm = if d <= 0.5 {
            d / pole_scaled_zeta(d, CoefficientTables::builtin())?
        } else {
            1.0 / eval.eval(0.0)?
        };
        Ok(ZetaKernel {
            period,
            series: Some((eval, inv_norm)),
        })
    }

    pub(crate) fn eval(&self, x: f64) -> Result<f64> {
        let t = unit_phase(x, self.period)?;
        if t == 0.0 {
            return Ok(1.0);
        }
        match &self.series {
            None => Ok(0.0),
            // The spectrum is nonnegative, so |Z| <= 1 holds exactly; clamp
            // away rounding excursions.
            Some((eval, inv_norm)) => Ok((eval.eval(t)? * inv_norm).clamp(-1.0, 1.0)),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct DerivativeKernel {
    period: f64,
    eval: PeriodicZeta<'static>,
    factor: f64,
    variance: f64,
}

impl DerivativeKernel {
    pub(crate) fn new(nu: f64, period: f64) -> Result<Self> {
        // ζ(2ν-1) Z_{ν-1}(x) = Re F(x, 2ν-1)
        let eval = PeriodicZeta::with_defaults(2.0 * nu - 1.0)?;
        let upper = PeriodicZeta::with_defaults(2.0 * nu + 1.0)?.eval(0.0)?;
        let factor = (TAU / period).powi(2) / upper;
        let variance = factor * eval.eval(0.0)?;
        Ok(DerivativeKernel {
            period,
            eval,
            factor,
            variance,
        })
    }

    pub(crate) fn variance(&self) -> f64 {
        self.variance
    }

    pub(crate) fn eval(&self, x: f64) -> Result<f64> {
        let t = unit_phase(x, self.period)?;
        if t == 0.0 {
            return Ok(self.variance);
        }
        Ok(self.factor * self.eval.eval(t)?)
    }
}
