use super::{Kernel, KernelSpec};
use crate::error::{check_finite, Result};

// Beyond this the Bessel factor underflows.
const MAX_ARGUMENT: f64 = 700.0;

/// Matérn covariance `(2/Γ(ν)) (r/2)^ν K_ν(r)` with `r = √(2ν) |x| / lengthscale`.
///
/// Equal to 1 at `x = 0`; `nu = 0` is white noise.
pub fn matern(x: f64, nu: f64, lengthscale: f64) -> Result<f64> {
    Kernel::new(KernelSpec::Matern { nu, lengthscale })?.eval(x)
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct MaternKernel {
    nu: f64,
    lengthscale: f64,
}

impl MaternKernel {
    pub(crate) fn new(nu: f64, lengthscale: f64) -> Self {
        MaternKernel { nu, lengthscale }
    }

    pub(crate) fn eval(&self, x: f64) -> Result<f64> {
        check_finite("x", x)?;
        if x == 0.0 {
            return Ok(1.0);
        }
        if self.nu == 0.0 {
            return Ok(0.0);
        }
        let nu = self.nu;
        let r = (2.0 * nu).sqrt() * x.abs() / self.lengthscale;
        if r > MAX_ARGUMENT {
            return Ok(0.0);
        }
        if r == 0.0 {
            return Ok(1.0);
        }
        let (_, k, _, _) = puruspe::besselik(nu, r);
        let scale = (nu * (0.5 * r).ln() - libm::lgamma(nu)).exp();
        Ok((2.0 * scale * k).min(1.0))
    }
}
