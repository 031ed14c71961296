use thiserror::Error;

/// Errors raised by the zeta evaluators, kernels and regression code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Riemann zeta evaluated exactly at its pole.
    #[error("pole of the Riemann zeta function at s = 1")]
    Pole,

    /// The defining series does not converge for this argument (s <= 1 at x mod 1 = 0).
    #[error("divergent series: {0}")]
    Divergence(String),

    /// A series did not meet its stop criterion within the term budget.
    #[error("series did not converge within {terms} terms (last tail estimate {bound:e})")]
    Convergence { terms: usize, bound: f64 },

    /// Points of the wrong dimension for the kernel.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Cholesky factorization failed on every rung of the jitter ladder.
    #[error("covariance matrix not positive definite after jitter ladder {ladder:?}")]
    Conditioning { ladder: Vec<f64> },

    /// A coefficient table could not be parsed or is incomplete.
    #[error("coefficient table: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn check_finite(name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        domain(format!("{name} must be finite, got {value}"))
    }
}
