use crate::error::{domain, Result};

/// Truncation policy shared by every series in [`crate::zeta_core`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesBudget {
    max_terms: usize,
    rel_tol: f64,
}

impl SeriesBudget {
    pub const DEFAULT_MAX_TERMS: usize = 64;
    pub const DEFAULT_REL_TOL: f64 = f64::EPSILON / 2.0;

    pub fn new(max_terms: usize, rel_tol: f64) -> Result<Self> {
        if max_terms == 0 {
            return domain("max_terms must be at least 1");
        }
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return domain(format!("rel_tol must lie in (0, 1), got {rel_tol}"));
        }
        Ok(SeriesBudget { max_terms, rel_tol })
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }
}

impl Default for SeriesBudget {
    fn default() -> Self {
        SeriesBudget {
            max_terms: Self::DEFAULT_MAX_TERMS,
            rel_tol: Self::DEFAULT_REL_TOL,
        }
    }
}
