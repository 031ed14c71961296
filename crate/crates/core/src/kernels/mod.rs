//! Covariance functions built on [`crate::zeta_core`].
//!
//! [`KernelSpec`] names a kernel family and its parameters; [`Kernel`] is the
//! prepared form, which does the `x`-independent work of the zeta evaluator
//! once so that Gram matrices cost one series per entry.

mod gram;
mod matern;
mod sphere;
mod zeta;

pub use gram::{gram, GramMatrix, Point, Points};
pub use matern::matern;
pub use sphere::{gneiting_conditions_hold, great_circle_angle, sphere_kernel};
pub use zeta::{z_nu, z_nu_derivative_cov};

use crate::error::{check_finite, domain, Result};
use matern::MaternKernel;
use sphere::SphereZetaKernel;
use zeta::{DerivativeKernel, ZetaKernel};

/// Kernel family and parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    /// `Z_ν(x / period)`; `nu = 0` is periodic white noise.
    PeriodicZeta { nu: f64, period: f64 },
    /// Matérn covariance with smoothness `nu`; `nu = 0` is white noise.
    Matern { nu: f64, lengthscale: f64 },
    /// Covariance of the derivative of a `Z_ν` process, `nu > 1`.
    PeriodicZetaDerivative { nu: f64, period: f64 },
    /// `a/2^{s+1} + Re F(θ/2π, s)`, normalized, on great-circle distances of S³.
    SphereZeta { nu: f64, a: f64 },
}

impl KernelSpec {
    /// Checks the parameter constraints of the variant.
    pub fn validate(&self) -> Result<()> {
        match *self {
            KernelSpec::PeriodicZeta { nu, period } => {
                check_nu(nu, 0.0, false)?;
                check_positive("period", period)
            }
            KernelSpec::Matern { nu, lengthscale } => {
                check_nu(nu, 0.0, false)?;
                check_positive("lengthscale", lengthscale)
            }
            KernelSpec::PeriodicZetaDerivative { nu, period } => {
                check_nu(nu, 1.0, true)?;
                check_positive("period", period)
            }
            KernelSpec::SphereZeta { nu, a } => {
                check_nu(nu, 0.0, true)?;
                check_finite("a", a)?;
                if a < 1.0 {
                    return domain(format!(
                        "sphere kernel needs a >= 1 to be positive definite, got {a}"
                    ));
                }
                Ok(())
            }
        }
    }

    /// Whether inputs are points on S³ rather than scalars.
    pub fn is_sphere(&self) -> bool {
        matches!(self, KernelSpec::SphereZeta { .. })
    }
}

fn check_nu(nu: f64, bound: f64, strict: bool) -> Result<()> {
    check_finite("nu", nu)?;
    let ok = if strict { nu > bound } else { nu >= bound };
    if ok {
        Ok(())
    } else {
        let rel = if strict { ">" } else { ">=" };
        domain(format!("nu must be {rel} {bound}, got {nu}"))
    }
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    check_finite(name, v)?;
    if v > 0.0 {
        Ok(())
    } else {
        domain(format!("{name} must be positive, got {v}"))
    }
}

/// A kernel ready for repeated evaluation.
#[derive(Debug, Clone)]
pub struct Kernel {
    spec: KernelSpec,
    inner: Inner,
}

#[derive(Debug, Clone)]
enum Inner {
    Zeta(ZetaKernel),
    Derivative(DerivativeKernel),
    Matern(MaternKernel),
    Sphere(SphereZetaKernel),
}

impl Kernel {
    pub fn new(spec: KernelSpec) -> Result<Self> {
        spec.validate()?;
        let inner = match spec {
            KernelSpec::PeriodicZeta { nu, period } => Inner::Zeta(ZetaKernel::new(nu, period)?),
            KernelSpec::PeriodicZetaDerivative { nu, period } => {
                Inner::Derivative(DerivativeKernel::new(nu, period)?)
            }
            KernelSpec::Matern { nu, lengthscale } => {
                Inner::Matern(MaternKernel::new(nu, lengthscale))
            }
            KernelSpec::SphereZeta { nu, a } => Inner::Sphere(SphereZetaKernel::new(nu, a)?),
        };
        Ok(Kernel { spec, inner })
    }

    pub fn spec(&self) -> KernelSpec {
        self.spec
    }

    /// Kernel value at a lag, or at a great-circle angle in `[0, π]` for the
    /// sphere kernel.
    pub fn eval(&self, lag: f64) -> Result<f64> {
        match &self.inner {
            Inner::Zeta(k) => k.eval(lag),
            Inner::Derivative(k) => k.eval(lag),
            Inner::Matern(k) => k.eval(lag),
            Inner::Sphere(k) => k.eval(lag),
        }
    }

    /// Value at zero lag.
    pub fn variance(&self) -> f64 {
        match &self.inner {
            Inner::Derivative(k) => k.variance(),
            _ => 1.0,
        }
    }

    /// Covariance between two inputs.
    pub fn between(&self, a: Point<'_>, b: Point<'_>) -> Result<f64> {
        let lag = match (a, b) {
            (Point::Scalar(a), Point::Scalar(b)) => {
                check_finite("point", a)?;
                check_finite("point", b)?;
                match self.spec {
                    KernelSpec::SphereZeta { .. } => sphere::fold_angle(a - b),
                    KernelSpec::Matern { .. } => a - b,
                    // Remainders are exact, so inputs one period apart give
                    // bit-identical rows.
                    KernelSpec::PeriodicZeta { period, .. }
                    | KernelSpec::PeriodicZetaDerivative { period, .. } => a % period - b % period,
                }
            }
            (Point::Unit4(a), Point::Unit4(b)) if self.spec.is_sphere() => {
                great_circle_angle(a, b)?
            }
            _ => {
                return Err(crate::Error::DimensionMismatch(format!(
                    "{:?} takes scalar inputs, not 4-vectors",
                    self.spec
                )))
            }
        };
        self.eval(lag)
    }
}
