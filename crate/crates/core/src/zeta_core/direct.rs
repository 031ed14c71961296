use super::argument::{cos_two_pi_multiple, reduce_argument, sin_pi};
use super::{Neumaier, SeriesValue};
use crate::error::{check_finite, domain, Error, Result};
use crate::zeta_core::SeriesBudget;

/// Terms after which the stop rule settles for accuracy relative to `max(|partial|, 1)`.
const RELATIVE_TERMS: usize = 50;

/// `Σ_{n ≤ N} cos(2πnx) / n^s` for `s > 1`.
///
/// The omitted tail is bounded by the smaller of the integral bound
/// `N^{1-s}/(s-1)` and the Abel-summation bound `(N+1)^{-s}/sin(πx)`.
/// Summation stops once that bound is below `rel_tol · |partial|`; after 50
/// terms the partial sum is measured against a floor of 1 instead (the scale
/// of `max_x |Re F(x, s)| = ζ(s)`), so small values near the zero crossings
/// cannot exhaust the budget.
pub fn direct_series_real(x: f64, s: f64, budget: &SeriesBudget) -> Result<f64> {
    direct_series_detailed(x, s, budget).map(|v| v.value)
}

pub(crate) fn direct_series_detailed(x: f64, s: f64, budget: &SeriesBudget) -> Result<SeriesValue> {
    check_finite("s", s)?;
    if s <= 1.0 {
        return domain(format!("direct summation needs s > 1, got {s}"));
    }
    let x = reduce_argument(x)?.value();
    let inv_sine = 1.0 / sin_pi(x);
    let mut sum = Neumaier::default();
    let mut bound = f64::INFINITY;
    for n in 1..=budget.max_terms() {
        let n_f = n as f64;
        let power = n_f.powf(-s);
        sum.add(cos_two_pi_multiple(n as u32, x) * power);
        let integral = power * n_f / (s - 1.0);
        let abel = (n_f + 1.0).powf(-s) * inv_sine;
        bound = integral.min(abel);
        let partial = sum.value().abs();
        let scale = if n >= RELATIVE_TERMS {
            partial.max(1.0)
        } else {
            partial
        };
        if bound <= budget.rel_tol() * scale {
            return Ok(SeriesValue {
                value: sum.value(),
                terms: n,
            });
        }
    }
    Err(Error::Convergence {
        terms: budget.max_terms(),
        bound,
    })
}
