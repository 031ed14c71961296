//! Double-precision evaluation of `Re F(x, s) = Σ_{n ≥ 1} cos(2πnx) / n^s`.
//!
//! Two branches:
//!
//! * `s >= 10`: the cosine series itself, which converges fast enough to sum
//!   directly.
//! * `s < 10`: the reflection of `F` onto a pair of Hurwitz zetas,
//!   `Re F(x, s) = Γ(1-s) sin(πs/2) (2π)^{s-1} [ζ(1-s, x) + ζ(1-s, 1-x)]`,
//!   expanded in powers of `x` with every removable singularity (integer `s`,
//!   the pole of ζ, poles of Γ) cancelled analytically.

mod argument;
mod budget;
mod direct;
mod hurwitz;
mod riemann;
pub(crate) mod table_format;
mod tables;

pub use argument::{cos_pi, reduce_argument, sin_pi, OddSplit, ReducedArgument, SDecomposition};
pub use budget::SeriesBudget;
pub use direct::direct_series_real;
pub use hurwitz::hurwitz_sum_pair;
pub(crate) use riemann::pole_scaled_zeta;
pub use riemann::riemann_zeta;
pub use tables::{gamma_ratio_minus_one, zeta_minus_zeta0, CoefficientTables};

use crate::error::{check_finite, domain, Error, Result};
use hurwitz::HurwitzPlan;

/// Boundary between the Hurwitz branch (`s < S_SPLIT`) and direct summation.
pub const S_SPLIT: f64 = 10.0;

/// Largest `s` the Hurwitz branch accepts when forced past [`S_SPLIT`].
pub const HURWITZ_MAX_S: f64 = 12.0;

/// Which evaluation path produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `x mod 1 = 0`: the value is `ζ(s)`.
    Origin,
    Direct,
    Hurwitz,
}

/// A value together with the work it took.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    /// Series terms summed (zero on the origin branch).
    pub terms: usize,
    pub branch: Branch,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct SeriesValue {
    pub value: f64,
    pub terms: usize,
}

/// Neumaier's compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    pub(crate) fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation += (self.sum - t) + v;
        } else {
            self.compensation += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// `s` moved off an exact integer by one relative ULP, so the cancelling
/// zeros at integers are approached rather than hit.
fn nudge(s: f64) -> f64 {
    if s.fract() == 0.0 {
        s * (1.0 + f64::EPSILON)
    } else {
        s
    }
}

/// `Re F(·, s)` for a fixed `s`, with the `x`-independent work done once.
///
/// Building one evaluator and calling [`PeriodicZeta::eval`] repeatedly is much
/// cheaper than calling [`periodic_zeta_real`] per point.
#[derive(Debug, Clone)]
pub struct PeriodicZeta<'t> {
    s: f64,
    budget: SeriesBudget,
    at_origin: Option<f64>,
    plan: Option<(HurwitzPlan, f64)>,
    _tables: std::marker::PhantomData<&'t CoefficientTables>,
}

impl PeriodicZeta<'static> {
    /// Evaluator with the default budget and the built-in tables.
    pub fn with_defaults(s: f64) -> Result<Self> {
        PeriodicZeta::new(s, SeriesBudget::default(), CoefficientTables::builtin())
    }
}

impl<'t> PeriodicZeta<'t> {
    pub fn new(s: f64, budget: SeriesBudget, tables: &'t CoefficientTables) -> Result<Self> {
        let branch = if s < S_SPLIT {
            Branch::Hurwitz
        } else {
            Branch::Direct
        };
        Self::with_branch(s, branch, budget, tables)
    }

    /// Evaluator pinned to one series branch, for comparing the two where
    /// both apply (`1 < s <= 12`). `Branch::Origin` is rejected.
    pub fn with_branch(
        s: f64,
        branch: Branch,
        budget: SeriesBudget,
        tables: &'t CoefficientTables,
    ) -> Result<Self> {
        check_finite("s", s)?;
        if s <= 0.0 {
            return domain(format!("s must be positive, got {s}"));
        }
        if branch == Branch::Direct && s <= 1.0 {
            return domain(format!("direct summation needs s > 1, got {s}"));
        }
        if branch == Branch::Origin {
            return domain("the origin is not a series branch".to_string());
        }
        if branch == Branch::Hurwitz && s > HURWITZ_MAX_S {
            return domain(format!(
                "the Hurwitz branch needs s <= {HURWITZ_MAX_S}, got {s}"
            ));
        }
        let at_origin = if s > 1.0 {
            Some(riemann::zeta_with(s, tables)?)
        } else {
            None
        };
        let plan = if branch == Branch::Hurwitz {
            let plan = HurwitzPlan::new(nudge(s), &budget, tables)?;
            let prefactor = plan.prefactor();
            Some((plan, prefactor))
        } else {
            None
        };
        Ok(PeriodicZeta {
            s,
            budget,
            at_origin,
            plan,
            _tables: std::marker::PhantomData,
        })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        self.eval_detailed(x).map(|e| e.value)
    }

    pub fn eval_detailed(&self, x: f64) -> Result<Evaluation> {
        let x = reduce_argument(x)?.value();
        if x == 0.0 {
            return match self.at_origin {
                Some(value) => Ok(Evaluation {
                    value,
                    terms: 0,
                    branch: Branch::Origin,
                }),
                None => Err(Error::Divergence(format!(
                    "Re F(0, s) diverges for s = {} <= 1",
                    self.s
                ))),
            };
        }
        match &self.plan {
            Some((plan, prefactor)) => {
                let sum = plan.sum(x)?;
                Ok(Evaluation {
                    value: prefactor * sum.value,
                    terms: sum.terms,
                    branch: Branch::Hurwitz,
                })
            }
            None => {
                let sum = direct::direct_series_detailed(x, self.s, &self.budget)?;
                Ok(Evaluation {
                    value: sum.value,
                    terms: sum.terms,
                    branch: Branch::Direct,
                })
            }
        }
    }
}

/// `Re F(x, s)` for `s > 0` (and `x mod 1 != 0` when `s <= 1`).
pub fn periodic_zeta_real(
    x: f64,
    s: f64,
    budget: &SeriesBudget,
    tables: &CoefficientTables,
) -> Result<f64> {
    check_finite("x", x)?;
    PeriodicZeta::new(s, *budget, tables)?.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn f(x: f64, s: f64) -> f64 {
        periodic_zeta_real(x, s, &SeriesBudget::default(), CoefficientTables::builtin()).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn origin_is_riemann_zeta() {
        assert_eq!(f(0.0, 3.0), riemann_zeta(3.0).unwrap());
        assert_eq!(f(2.0, 3.0), riemann_zeta(3.0).unwrap());
    }

    #[test]
    fn half_point() {
        for s in [1.5, 2.0, 3.0, 3.0 + 2f64.powi(-20), 7.0, 15.0] {
            let expected = (2f64.powf(1.0 - s) - 1.0) * riemann_zeta(s).unwrap();
            assert!(rel(f(0.5, s), expected) < 1e-14, "s = {s}");
        }
    }

    #[test]
    fn quarter_point_at_two() {
        assert!(rel(f(0.25, 2.0), -PI * PI / 48.0) < 1e-13);
    }

    #[test]
    fn bernoulli_polynomials() {
        for k in 1..64 {
            let x = k as f64 / 128.0;
            let b2 = PI * PI * (x * x - x + 1.0 / 6.0);
            let b4 = -(PI.powi(4) / 3.0) * (x.powi(4) - 2.0 * x.powi(3) + x * x - 1.0 / 30.0);
            // Skip the neighbourhoods of the polynomial zeros.
            assert!(rel(f(x, 2.0), b2) < 1e-13 || b2.abs() < 0.05, "s=2 x={x}");
            assert!(rel(f(x, 4.0), b4) < 1e-13 || b4.abs() < 0.05, "s=4 x={x}");
        }
    }

    #[test]
    fn errors() {
        let b = SeriesBudget::default();
        let t = CoefficientTables::builtin();
        assert!(matches!(
            periodic_zeta_real(0.3, 0.0, &b, t),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            periodic_zeta_real(0.3, -1.0, &b, t),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            periodic_zeta_real(f64::NAN, 2.0, &b, t),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            periodic_zeta_real(1.0, 0.5, &b, t),
            Err(Error::Divergence(_))
        ));
        assert!(matches!(
            periodic_zeta_real(0.0, 1.0, &b, t),
            Err(Error::Divergence(_))
        ));
        assert!(periodic_zeta_real(0.3, 1.0, &b, t).is_ok());
    }

    #[test]
    fn neumaier_recovers_cancellation() {
        let mut s = Neumaier::default();
        for v in [1.0, 1e100, 1.0, -1e100] {
            s.add(v);
        }
        assert_eq!(s.value(), 2.0);
    }
}
