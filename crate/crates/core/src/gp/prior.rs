use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{check_finite, domain, Result};
use crate::zeta_core::{cos_pi, sin_pi};

/// A truncated draw `f(x) = Σ_{n ≤ N} c_n cos(2πnx) + s_n sin(2πnx)` with
/// `c_n, s_n ~ Normal(0, n^{-s})`, `s = 1 + 2ν`.
///
/// Its covariance is `Σ_{n ≤ N} cos(2πn(x₁ - x₂)) / n^s`, the truncation of
/// `ζ(s) Z_ν(x₁ - x₂)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSample {
    pub truncation: usize,
    pub cos_coeffs: Vec<f64>,
    pub sin_coeffs: Vec<f64>,
}

impl FourierSample {
    /// Draws the coefficients from a ChaCha20 stream seeded with `seed`, in the
    /// order `c_1, s_1, c_2, s_2, …`.
    pub fn draw(nu: f64, truncation: usize, seed: u64) -> Result<Self> {
        check_finite("nu", nu)?;
        if nu <= 0.0 {
            return domain(format!("nu must be positive, got {nu}"));
        }
        if truncation == 0 {
            return domain("truncation must be at least 1");
        }
        let s = 1.0 + 2.0 * nu;
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let mut cos_coeffs = Vec::with_capacity(truncation);
        let mut sin_coeffs = Vec::with_capacity(truncation);
        for n in 1..=truncation {
            let sd = (n as f64).powf(-0.5 * s);
            let c: f64 = StandardNormal.sample(&mut rng);
            let z: f64 = StandardNormal.sample(&mut rng);
            cos_coeffs.push(sd * c);
            sin_coeffs.push(sd * z);
        }
        Ok(FourierSample {
            truncation,
            cos_coeffs,
            sin_coeffs,
        })
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        check_finite("x", x)?;
        let t = x - x.floor();
        let mut sum = 0.0;
        for n in 1..=self.truncation {
            // 2·frac(n t) keeps the trigonometric argument small.
            let nt = n as f64 * t;
            let phase = 2.0 * (nt - nt.floor());
            sum += self.cos_coeffs[n - 1] * cos_pi(phase) + self.sin_coeffs[n - 1] * sin_pi(phase);
        }
        Ok(sum)
    }
}

/// Evaluates one prior draw at `xs`; deterministic in `seed`.
pub fn sample_prior(nu: f64, truncation: usize, seed: u64, xs: &[f64]) -> Result<Vec<f64>> {
    let sample = FourierSample::draw(nu, truncation, seed)?;
    xs.iter().map(|&x| sample.eval(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_term_antiperiodic_at_half() {
        let v = sample_prior(1.0, 1, 7, &[0.0, 0.5]).unwrap();
        assert!((v[1] + v[0]).abs() < 1e-15 * v[0].abs().max(1.0));
    }

    #[test]
    fn periodic_and_deterministic() {
        let a = sample_prior(0.5, 1, 3, &[0.375, 1.375]).unwrap();
        assert_eq!(a[0], a[1]);
        let b = sample_prior(0.5, 40, 11, &[0.1, 0.7]).unwrap();
        assert_eq!(b, sample_prior(0.5, 40, 11, &[0.1, 0.7]).unwrap());
        assert_ne!(b, sample_prior(0.5, 40, 12, &[0.1, 0.7]).unwrap());
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(sample_prior(0.0, 5, 1, &[0.0]).is_err());
        assert!(sample_prior(1.0, 0, 1, &[0.0]).is_err());
    }
}
