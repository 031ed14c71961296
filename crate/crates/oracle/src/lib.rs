//! Arbitrary-precision reference implementation for the periodic zeta function.
//!
//! Shares no numerical code with `perzeta-core`: all arithmetic runs on
//! `astro_float` big floats, and the algorithms are different ones
//! (residue-class summation of the defining cosine series with an
//! Euler–Maclaurin tail, rather than the Hurwitz expansion about `x = 0`).
//! Used by the tests, the accuracy sweep and the coefficient-table generator.

mod bernoulli;
mod config;
mod gamma;
pub mod hp;
mod hurwitz;
mod periodic;
mod sweep;
mod tables;

pub use astro_float::BigFloat;
pub use bernoulli::Bernoulli;
pub use config::{OracleConfig, OracleError};
pub use hp::{to_f64, Hp};
pub use sweep::{sweep_accuracy, ulp_error, AccuracyReport, SweepGrid};
pub use tables::{generate_coefficient_tables, GeneratedTables};

use astro_float::BigFloat as Big;

/// Extra bits carried above the configured working precision.
const GUARD_BITS: usize = 64;

/// Reference evaluator. Holds the precision context and caches that are
/// reused across calls (Bernoulli numbers, logarithms of primes).
#[derive(Debug)]
pub struct Oracle {
    cfg: OracleConfig,
    hp: Hp,
    bernoulli: Bernoulli,
    ln_primes: Vec<Option<Big>>,
}

impl Oracle {
    pub fn new(cfg: OracleConfig) -> Result<Self, OracleError> {
        cfg.validate()?;
        Ok(Oracle {
            hp: Hp::new(cfg.working_precision_bits + GUARD_BITS)?,
            cfg,
            bernoulli: Bernoulli::default(),
            ln_primes: Vec::new(),
        })
    }

    pub fn config(&self) -> &OracleConfig {
        &self.cfg
    }

    pub fn hp(&mut self) -> &mut Hp {
        &mut self.hp
    }

    /// Relative truncation error accepted before escalating.
    fn target(&self) -> Big {
        let bits = self.cfg.working_precision_bits as i32 - 6;
        let mut t = self.hp.int(1);
        t.set_exponent(1 - bits);
        t
    }

    /// `B_{2k}/(2k)!` at working precision.
    fn bernoulli_ratio(&mut self, k: usize) -> Big {
        let r = self.bernoulli.even_over_factorial(k);
        self.hp.rational(&r)
    }
}
