use super::argument::{pow_two_pi, sin_pi};
use super::tables::CoefficientTables;
use super::Neumaier;
use crate::error::{check_finite, Error, Result};

/// Direct terms before the Euler–Maclaurin tail.
const EM_CUTOFF: u32 = 10;

/// `B_{2k} / (2k)!` for k = 1..=8.
const EM_BERNOULLI: [f64; 8] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
];

/// Below this the pole-free Taylor table takes over from Euler–Maclaurin.
const TABLE_UPPER: f64 = 1.5;
/// Below this the reflection formula is used.
const TABLE_LOWER: f64 = -0.5;

/// Riemann zeta function for real `s != 1`.
///
/// * `s > 3/2`: Euler–Maclaurin summation.
/// * `-1/2 <= s <= 3/2`: Taylor series of the pole-free zeta plus `1/(s-1)`.
/// * `s < -1/2`: reflection formula, with the sine factor reduced around the
///   nearest even integer so trivial zeros come out exact.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    zeta_with(s, CoefficientTables::builtin())
}

pub(crate) fn zeta_with(s: f64, tables: &CoefficientTables) -> Result<f64> {
    check_finite("s", s)?;
    if s == 1.0 {
        return Err(Error::Pole);
    }
    Ok(if s > TABLE_UPPER {
        euler_maclaurin(s)
    } else if s >= TABLE_LOWER {
        tables.zeta_tilde(s) + 1.0 / (s - 1.0)
    } else {
        reflected(s)
    })
}

/// `d ζ(1 + d)`, finite across the pole (equal to 1 at `d = 0`).
pub(crate) fn pole_scaled_zeta(d: f64, tables: &CoefficientTables) -> Result<f64> {
    check_finite("d", d)?;
    if d.abs() <= 0.5 {
        Ok(d.mul_add(tables.zeta_tilde(1.0 + d), 1.0))
    } else {
        Ok(d * zeta_with(1.0 + d, tables)?)
    }
}

fn euler_maclaurin(s: f64) -> f64 {
    let cutoff = EM_CUTOFF as f64;
    let cutoff_pow = cutoff.powf(-s);
    let inv_sq = 1.0 / (cutoff * cutoff);

    // B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}, smallest first.
    let mut corrections = [0.0; EM_BERNOULLI.len()];
    let mut rising = s; // (s)_{2k-1}
    let mut power = cutoff_pow / cutoff; // N^{-s-2k+1}
    for (k, b) in EM_BERNOULLI.iter().enumerate() {
        corrections[k] = b * rising * power;
        let m = 2.0 * k as f64 + 1.0;
        rising *= (s + m) * (s + m + 1.0);
        power *= inv_sq;
    }

    let mut sum = Neumaier::default();
    for c in corrections.iter().rev() {
        sum.add(*c);
    }
    sum.add(0.5 * cutoff_pow);
    sum.add(cutoff_pow * cutoff / (s - 1.0));
    for n in (2..EM_CUTOFF).rev() {
        sum.add((n as f64).powf(-s));
    }
    sum.add(1.0);
    sum.value()
}

fn reflected(s: f64) -> f64 {
    // ζ(s) = 2 (2π)^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
    let sine = sin_pi(0.5 * s);
    if sine == 0.0 {
        return 0.0;
    }
    let t = 1.0 - s;
    let zeta_t = euler_maclaurin(t);
    if t < 170.0 {
        2.0 * pow_two_pi(-t) * sine * libm::tgamma(t) * zeta_t
    } else {
        let log_mag = std::f64::consts::LN_2 - t * std::f64::consts::TAU.ln() + libm::lgamma(t);
        log_mag.exp() * sine * zeta_t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn classical_values() {
        // π²/6 and π⁴/90, correctly rounded
        assert!(rel(riemann_zeta(2.0).unwrap(), 1.644_934_066_848_226_4) < 2e-16);
        assert!(rel(riemann_zeta(4.0).unwrap(), 1.082_323_233_711_138_2) < 2e-16);
        assert!(rel(riemann_zeta(3.0).unwrap(), 1.202_056_903_159_594_3) < 2e-16);
        assert!(rel(riemann_zeta(21.0).unwrap(), 1.000_000_476_932_986_8) < 2e-16);
        assert_eq!(riemann_zeta(0.0).unwrap(), -0.5);
        assert!(rel(riemann_zeta(-1.0).unwrap(), -1.0 / 12.0) < 1e-15);
        assert!(rel(riemann_zeta(-3.0).unwrap(), 1.0 / 120.0) < 1e-15);
        assert!(rel(riemann_zeta(-0.5).unwrap(), -0.207_886_224_977_354_57) < 1e-15);
        assert!(rel(riemann_zeta(0.25).unwrap(), -0.813_278_405_261_891_7) < 1e-15);
        assert_eq!(riemann_zeta(1e6).unwrap(), 1.0);
    }

    #[test]
    fn trivial_zeros_are_exact() {
        for k in 1..30 {
            assert_eq!(riemann_zeta(-2.0 * k as f64).unwrap(), 0.0);
        }
    }

    #[test]
    fn relative_accuracy_near_trivial_zero() {
        // ζ'(-2) = -ζ(3)/(4π²)
        let d = 2f64.powi(-40);
        let slope = -1.202_056_903_159_594_3 / (4.0 * PI * PI);
        let got = riemann_zeta(-2.0 + d).unwrap();
        assert!(rel(got, slope * d) < 1e-10);
    }

    #[test]
    fn pole_and_domain() {
        assert_eq!(riemann_zeta(1.0), Err(Error::Pole));
        assert!(matches!(riemann_zeta(f64::NAN), Err(Error::Domain(_))));
        assert!(matches!(riemann_zeta(f64::INFINITY), Err(Error::Domain(_))));
    }

    #[test]
    fn near_pole() {
        // ζ(1 + d) = 1/d + γ + O(d)
        let gamma = 0.577_215_664_901_532_9;
        for offset in [1e-3, -1e-3, 1e-8, -1e-8] {
            let s = 1.0 + offset;
            let d = s - 1.0;
            let z = riemann_zeta(s).unwrap();
            assert!((z - 1.0 / d - gamma).abs() < 1e-2 * d.abs().sqrt());
        }
    }

    #[test]
    fn pole_scaled_is_continuous() {
        let t = CoefficientTables::builtin();
        assert_eq!(pole_scaled_zeta(0.0, t).unwrap(), 1.0);
        let a = pole_scaled_zeta(1e-14, t).unwrap();
        let b = pole_scaled_zeta(-1e-14, t).unwrap();
        assert!((a - 1.0).abs() < 1e-13 && (b - 1.0).abs() < 1e-13);
        // Matches d ζ(1+d) away from the pole on both sides of the switch.
        for d in [0.49, 0.51, -0.49, -0.51, 2.0, -3.5] {
            let expected = d * riemann_zeta(1.0 + d).unwrap();
            assert!(rel(pole_scaled_zeta(d, t).unwrap(), expected) < 1e-14);
        }
    }

    #[test]
    fn branches_agree_at_switch_points() {
        for s in [1.5, -0.5] {
            let lo = riemann_zeta(s - 1e-12).unwrap();
            let hi = riemann_zeta(s + 1e-12).unwrap();
            assert!(rel(lo, hi) < 1e-11, "switch at {s}: {lo} vs {hi}");
        }
    }
}
