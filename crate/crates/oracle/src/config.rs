use thiserror::Error;

/// Precision and truncation settings for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Target precision in bits (at least 70). Arithmetic runs with extra guard bits.
    pub working_precision_bits: usize,
    /// Direct terms summed before the Euler–Maclaurin tail.
    pub tail_terms: usize,
    /// Number of Bernoulli correction terms in the tail.
    pub em_correction_order: usize,
    /// How many times `tail_terms` and `em_correction_order` may be doubled
    /// when the truncation estimate misses the target.
    pub max_escalations: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            working_precision_bits: 128,
            tail_terms: 64,
            em_correction_order: 8,
            max_escalations: 3,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<(), OracleError> {
        if self.working_precision_bits < 70 {
            return Err(OracleError::Config(format!(
                "working precision must be at least 70 bits, got {}",
                self.working_precision_bits
            )));
        }
        if self.tail_terms < 4 || self.em_correction_order < 1 {
            return Err(OracleError::Config(
                "need at least 4 tail terms and one correction term".into(),
            ));
        }
        Ok(())
    }

    /// Doubles precision and tail length; used for self-consistency checks.
    pub fn refined(&self) -> Self {
        OracleConfig {
            working_precision_bits: 2 * self.working_precision_bits,
            tail_terms: 2 * self.tail_terms,
            ..*self
        }
    }

    pub(crate) fn escalated(&self, level: u32) -> (usize, usize) {
        (self.tail_terms << level, self.em_correction_order << level)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    /// The configuration cannot reach the precision target for this input.
    #[error("oracle configuration: {0}")]
    Config(String),

    /// Input outside the oracle's domain.
    #[error("oracle domain: {0}")]
    Domain(String),

    #[error("big-float arithmetic: {0}")]
    Arithmetic(String),

    /// Error from the double-precision library under test.
    #[error(transparent)]
    Core(#[from] perzeta_core::Error),
}
