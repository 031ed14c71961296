use std::sync::OnceLock;

use super::table_format;
use crate::error::{check_finite, domain, Error, Result};

mod generated {
    include!(concat!(env!("OUT_DIR"), "/coefficients.rs"));
}

/// Precomputed Taylor coefficients used to resolve the pole cancellations.
///
/// * `zeta_tilde`: coefficients about 0 of the pole-free zeta
///   `ζ̃(s) = ζ(s) - 1/(s-1)`.
/// * `log_gamma`: for each tabulated even shift `q`, the coefficients
///   `ψ_{k-1}(1+q)/k!` of `log Γ(1+q+u) - log Γ(1+q)`; `q = 0` is
///   `log Γ(1+u)` itself.
///
/// Immutable once built. The default instance is generated offline at extended
/// precision and embedded at compile time from `data/coefficients.txt`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTables {
    zeta_tilde: Vec<f64>,
    log_gamma: Vec<(u32, Vec<f64>)>,
    // log Γ(1+q+u) - log Γ(1+q) - log Γ(1+u), one row per q.
    log_ratio: Vec<(u32, Vec<f64>)>,
}

impl CoefficientTables {
    /// The tables embedded at build time.
    pub fn builtin() -> &'static CoefficientTables {
        static TABLES: OnceLock<CoefficientTables> = OnceLock::new();
        TABLES.get_or_init(|| {
            let log_gamma = generated::LOG_GAMMA
                .iter()
                .map(|(q, c)| (*q, c.to_vec()))
                .collect();
            CoefficientTables::from_parts(generated::ZETA_TILDE.to_vec(), log_gamma)
                .expect("embedded coefficient tables are validated by the build script")
        })
    }

    /// Parses the plain-text table format written by the table generator.
    pub fn from_text(text: &str) -> Result<Self> {
        let parsed = table_format::parse(text).map_err(Error::Table)?;
        Self::from_parts(parsed.zeta_tilde, parsed.log_gamma)
    }

    pub fn from_parts(zeta_tilde: Vec<f64>, log_gamma: Vec<(u32, Vec<f64>)>) -> Result<Self> {
        if zeta_tilde.is_empty() {
            return Err(Error::Table("empty zeta_tilde coefficients".into()));
        }
        let base = match log_gamma.iter().find(|(q, _)| *q == 0) {
            Some((_, c)) => c.clone(),
            None => return Err(Error::Table("missing log-gamma row for q = 0".into())),
        };
        let mut log_ratio = Vec::with_capacity(log_gamma.len());
        for (q, coeffs) in &log_gamma {
            if q % 2 != 0 {
                return Err(Error::Table(format!("odd shift q = {q}")));
            }
            // Rows may differ in length; missing coefficients are zero.
            let len = coeffs.len().max(base.len());
            let at = |c: &[f64], k: usize| c.get(k).copied().unwrap_or(0.0);
            let diff = (0..len).map(|k| at(coeffs, k) - at(&base, k)).collect();
            log_ratio.push((*q, diff));
        }
        Ok(CoefficientTables {
            zeta_tilde,
            log_gamma,
            log_ratio,
        })
    }

    pub fn zeta_tilde_coeffs(&self) -> &[f64] {
        &self.zeta_tilde
    }

    /// Taylor coefficients of `log Γ(1+q+u) - log Γ(1+q)`, starting at `u^1`.
    pub fn log_gamma_coeffs(&self, q: u32) -> Option<&[f64]> {
        self.log_gamma
            .iter()
            .find(|(k, _)| *k == q)
            .map(|(_, c)| c.as_slice())
    }

    pub fn shifts(&self) -> impl Iterator<Item = u32> + '_ {
        self.log_gamma.iter().map(|(q, _)| *q)
    }

    /// `ζ̃(t)` from the Taylor table. Accurate for `|t| <= 3/2`.
    pub(crate) fn zeta_tilde(&self, t: f64) -> f64 {
        horner(&self.zeta_tilde, t)
    }
}

fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc.mul_add(t, c))
}

/// `ζ(-u) - ζ(0)` with full relative accuracy as `u → 0`.
///
/// Uses `ζ(-u) - ζ(0) = (ζ̃(-u) - ζ̃(0)) + u / (1 + u)`.
pub fn zeta_minus_zeta0(u: f64, tables: &CoefficientTables) -> Result<f64> {
    check_finite("u", u)?;
    if u.abs() > 0.5 {
        return domain(format!("|u| must not exceed 1/2, got {u}"));
    }
    let t = -u;
    let tail = &tables.zeta_tilde[1..];
    let delta = t * horner(tail, t);
    Ok(delta + u / (1.0 + u))
}

/// `Γ(1+q+u) / (Γ(1+q) Γ(1+u)) - 1` with full relative accuracy as `u → 0`.
pub fn gamma_ratio_minus_one(q: u32, u: f64, tables: &CoefficientTables) -> Result<f64> {
    check_finite("u", u)?;
    if u.abs() > 0.5 {
        return domain(format!("|u| must not exceed 1/2, got {u}"));
    }
    let coeffs = match tables.log_ratio.iter().find(|(k, _)| *k == q) {
        Some((_, c)) => c,
        None => return domain(format!("no log-gamma table for q = {q}")),
    };
    let log_ratio = u * horner(coeffs, u);
    Ok(log_ratio.exp_m1())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_shape() {
        let t = CoefficientTables::builtin();
        assert_eq!(t.zeta_tilde_coeffs()[0], 0.5);
        let shifts: Vec<u32> = t.shifts().collect();
        assert_eq!(shifts, vec![0, 2, 4, 6, 8, 10]);
        // ψ(1) = -γ.
        let g = t.log_gamma_coeffs(0).unwrap()[0];
        assert!((g + 0.5772156649015329).abs() < 1e-16);
    }

    #[test]
    fn zeta_minus_zeta0_examples() {
        let t = CoefficientTables::builtin();
        assert_eq!(zeta_minus_zeta0(0.0, t).unwrap(), 0.0);
        // ζ(-1/2) = -0.20788622497735456601...
        let v = zeta_minus_zeta0(0.5, t).unwrap();
        assert!((v - (-0.207_886_224_977_354_57 + 0.5)).abs() < 1e-16);
        // ζ(1/4) = -0.81327840526189165652...
        let v = zeta_minus_zeta0(-0.25, t).unwrap();
        assert!((v - (-0.813_278_405_261_891_7 + 0.5)).abs() < 2e-16);
        assert!(zeta_minus_zeta0(0.6, t).is_err());
        assert!(zeta_minus_zeta0(f64::NAN, t).is_err());
    }

    #[test]
    fn zeta_minus_zeta0_small_u_is_relative() {
        // ζ'(0) = -ln(2π)/2, so ζ(-u) - ζ(0) ≈ u ln(2π)/2.
        let t = CoefficientTables::builtin();
        let u = 1e-12;
        let expected = u * 0.918_938_533_204_672_8;
        assert!(((zeta_minus_zeta0(u, t).unwrap() - expected) / expected).abs() < 1e-11);
    }

    #[test]
    fn gamma_ratio_examples() {
        let t = CoefficientTables::builtin();
        assert_eq!(gamma_ratio_minus_one(0, 0.3, t).unwrap(), 0.0);
        assert_eq!(gamma_ratio_minus_one(2, 0.0, t).unwrap(), 0.0);
        // Γ(3.5)/(Γ(3)Γ(1.5)) = (1 + 1/2)(1 + 1/4) = 1.875.
        let v = gamma_ratio_minus_one(2, 0.5, t).unwrap();
        assert!((v - 0.875).abs() <= 2.0 * f64::EPSILON);
        assert!(gamma_ratio_minus_one(3, 0.1, t).is_err());
        assert!(gamma_ratio_minus_one(12, 0.1, t).is_err());
        assert!(gamma_ratio_minus_one(2, 0.75, t).is_err());
    }

    #[test]
    fn gamma_ratio_is_product() {
        // Γ(1+q+u)/(Γ(1+q)Γ(1+u)) = Π_{j=1}^{q} (1 + u/j).
        let t = CoefficientTables::builtin();
        for q in [2u32, 4, 6, 8, 10] {
            for i in -10..=10 {
                let u = i as f64 * 0.05;
                let log: f64 = (1..=q).map(|j| (u / j as f64).ln_1p()).sum();
                let expected = log.exp_m1();
                let got = gamma_ratio_minus_one(q, u, t).unwrap();
                assert!((got - expected).abs() <= 8.0 * f64::EPSILON * expected.abs().max(1e-300));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let text = "# demo\n[zeta_tilde]\n0.5\n0.25\n[log_gamma 0]\n-0.5\n[log_gamma 2]\n1.0\n";
        let t = CoefficientTables::from_text(text).unwrap();
        assert_eq!(t.zeta_tilde_coeffs(), &[0.5, 0.25]);
        assert_eq!(t.log_gamma_coeffs(2).unwrap(), &[1.0]);
        assert!(CoefficientTables::from_text("[zeta_tilde]\n0.5\n").is_err());
        assert!(CoefficientTables::from_text("[log_gamma 0]\n0.5\n").is_err());
        assert!(CoefficientTables::from_text("[zeta_tilde]\nabc\n[log_gamma 0]\n1\n").is_err());
        assert!(CoefficientTables::from_text("1.0\n").is_err());
        assert!(CoefficientTables::from_text("[bogus]\n").is_err());
    }
}
