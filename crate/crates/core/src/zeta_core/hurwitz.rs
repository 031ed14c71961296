use super::argument::{cos_pi, pow_two_pi, SDecomposition};
use super::riemann::{pole_scaled_zeta, zeta_with};
use super::tables::{gamma_ratio_minus_one, zeta_minus_zeta0, CoefficientTables};
use super::{Neumaier, SeriesBudget, SeriesValue};
use crate::error::{check_finite, domain, Error, Result};

/// Relative floor for the stop rule, measured against the largest term seen.
const STOP_FLOOR: f64 = 1.0 / (1u64 << 30) as f64;

/// `ζ(1-s, x) + ζ(1-s, 1-x)` for `x ∈ (0, 1/2]` and `0 < s < 12.5`.
///
/// Expands both Hurwitz zetas about `x = 0`; the odd powers cancel and
///
/// ```text
/// S(x) = x^{s-1} + 2 Σ_{even n ≥ 0} (1-s)_n / n! · ζ(n+1-s) · x^n.
/// ```
///
/// Near an odd integer `s = 1 + q + u` the sum vanishes like `u`. The `n = q`
/// term is then folded into the leading power,
///
/// ```text
/// x^{s-1} + 2 (1+g) ζ(-u) x^q = x^q [expm1(u ln x) + 2 (1+g) (ζ(-u) - ζ(0)) - g],
/// ```
///
/// with `g = Γ(1+q+u)/(Γ(1+q)Γ(1+u)) - 1`, and each remaining term carries an
/// explicit factor `u` (either from the Pochhammer product or from a trivial
/// zero of ζ), so the result keeps full relative accuracy.
pub fn hurwitz_sum_pair(
    x_reduced: f64,
    s: f64,
    budget: &SeriesBudget,
    tables: &CoefficientTables,
) -> Result<f64> {
    HurwitzPlan::new(s, budget, tables)?
        .sum(x_reduced)
        .map(|v| v.value)
}

/// The `x`-independent part of the Hurwitz expansion for one `s`.
#[derive(Debug, Clone)]
pub(crate) struct HurwitzPlan {
    s: f64,
    rel_tol: f64,
    merged: Option<Merged>,
    // (n, coefficient of x^n), increasing n.
    terms: Vec<(i32, f64)>,
}

#[derive(Debug, Clone, Copy)]
struct Merged {
    q: i32,
    u: f64,
    // 2 (1+g) (ζ(-u) - ζ(0)) - g
    constant: f64,
}

impl HurwitzPlan {
    pub(crate) fn new(s: f64, budget: &SeriesBudget, tables: &CoefficientTables) -> Result<Self> {
        check_finite("s", s)?;
        // Odd splits up to s = 11 + 1/2 are tabulated.
        if !(s > 0.0 && s < 12.5) {
            return domain(format!("Hurwitz expansion needs 0 < s < 12.5, got {s}"));
        }
        let merged = match SDecomposition::new(s).odd {
            Some(split) => {
                let g = gamma_ratio_minus_one(split.q, split.u, tables)?;
                let dz = zeta_minus_zeta0(split.u, tables)?;
                Some(Merged {
                    q: split.q as i32,
                    u: split.u,
                    constant: 2.0 * (1.0 + g) * dz - g,
                })
            }
            None => None,
        };

        let wanted = budget.max_terms().saturating_sub(1);
        let mut terms = Vec::with_capacity(wanted);
        // P_{n-1} = Π_{j=1}^{n-1} (j - s)/j
        let mut pochhammer = 1.0;
        let mut n = 0i32;
        while terms.len() < wanted {
            if merged.is_none_or(|m| m.q != n) {
                let c = if n == 0 {
                    2.0 * zeta_with(1.0 - s, tables)?
                } else {
                    let d = n as f64 - s;
                    2.0 * pochhammer / n as f64 * pole_scaled_zeta(d, tables)?
                };
                terms.push((n, c));
            }
            // Advance P from index n-1 to n+1.
            if n > 0 {
                pochhammer *= (n as f64 - s) / n as f64;
            }
            let next = (n + 1) as f64;
            pochhammer *= (next - s) / next;
            n += 2;
        }
        Ok(HurwitzPlan {
            s,
            rel_tol: budget.rel_tol(),
            merged,
            terms,
        })
    }

    pub(crate) fn sum(&self, x: f64) -> Result<SeriesValue> {
        check_finite("x", x)?;
        if !(x > 0.0 && x <= 0.5) {
            return domain(format!("Hurwitz expansion needs x in (0, 1/2], got {x}"));
        }
        let lead = match self.merged {
            Some(m) => x.powi(m.q) * ((m.u * x.ln()).exp_m1() + m.constant),
            None => x.powf(self.s - 1.0),
        };
        let mut sum = Neumaier::default();
        sum.add(lead);
        let mut scale = lead.abs();
        let mut count = 1;
        let mut last = f64::INFINITY;
        for &(n, c) in &self.terms {
            let term = c * x.powi(n);
            sum.add(term);
            count += 1;
            scale = scale.max(term.abs());
            last = term.abs();
            if f64::from(n) > self.s
                && last <= self.rel_tol * sum.value().abs().max(STOP_FLOOR * scale)
            {
                return Ok(SeriesValue {
                    value: sum.value(),
                    terms: count,
                });
            }
        }
        Err(Error::Convergence {
            terms: count,
            bound: last,
        })
    }

    /// `Γ(1-s) sin(πs/2) (2π)^{s-1}`, written as `(2π)^{s-1} π / (2 Γ(s) cos(πs/2))`
    /// so it has no poles at even `s`. At odd `s` the cosine vanishes and the
    /// matching zero of the Hurwitz sum cancels it; the cosine is reduced
    /// about the nearest integer so that zero is resolved exactly.
    pub(crate) fn prefactor(&self) -> f64 {
        let s = self.s;
        let cosine = cos_pi(0.5 * s);
        pow_two_pi(s - 1.0) * std::f64::consts::FRAC_PI_2 / (libm::tgamma(s) * cosine)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tables() -> &'static CoefficientTables {
        CoefficientTables::builtin()
    }

    #[test]
    fn half_point_at_two() {
        let v = hurwitz_sum_pair(0.5, 2.0, &SeriesBudget::default(), tables()).unwrap();
        assert!((v - 1.0 / 12.0).abs() < 1e-16);
    }

    #[test]
    fn exact_odd_integer_gives_zero() {
        for s in [1.0, 3.0, 5.0, 7.0, 9.0] {
            let v = hurwitz_sum_pair(0.3, s, &SeriesBudget::default(), tables()).unwrap();
            assert!(v.abs() < 1e-15, "s = {s}: {v}");
        }
    }

    #[test]
    fn vanishes_linearly_near_odd() {
        // S(x; 3+u)/u should settle to a limit as u → 0.
        let b = SeriesBudget::default();
        let ratio = |s: f64| hurwitz_sum_pair(0.25, s, &b, tables()).unwrap() / (s - 3.0);
        let (r1, r2) = (ratio(3.0 + 1e-6), ratio(3.0 + 1e-12));
        assert!(((r1 - r2) / r2).abs() < 1e-5);
    }

    #[test]
    fn domain_checks() {
        let b = SeriesBudget::default();
        assert!(hurwitz_sum_pair(0.0, 2.5, &b, tables()).is_err());
        assert!(hurwitz_sum_pair(0.6, 2.5, &b, tables()).is_err());
        assert!(hurwitz_sum_pair(0.3, 12.6, &b, tables()).is_err());
        assert!(hurwitz_sum_pair(0.3, 0.0, &b, tables()).is_err());
    }
}
