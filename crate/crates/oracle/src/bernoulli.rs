use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact Bernoulli numbers `B_0, B_1, …` (with `B_1 = -1/2`), extended on demand.
#[derive(Debug, Clone)]
pub struct Bernoulli {
    values: Vec<BigRational>,
}

impl Default for Bernoulli {
    fn default() -> Self {
        Bernoulli {
            values: vec![BigRational::one()],
        }
    }
}

impl Bernoulli {
    /// `B_n`.
    pub fn get(&mut self, n: usize) -> &BigRational {
        while self.values.len() <= n {
            self.extend();
        }
        &self.values[n]
    }

    /// `B_{2k} / (2k)!`.
    pub fn even_over_factorial(&mut self, k: usize) -> BigRational {
        let b = self.get(2 * k).clone();
        b / BigRational::from_integer(factorial(2 * k))
    }

    fn extend(&mut self) {
        // Σ_{k=0}^{m} C(m+1, k) B_k = 0
        let m = self.values.len();
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (k, b) in self.values.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * b;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        self.values
            .push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_values() {
        let mut b = Bernoulli::default();
        assert_eq!(b.get(1), &r(-1, 2));
        assert_eq!(b.get(2), &r(1, 6));
        assert_eq!(b.get(3), &r(0, 1));
        assert_eq!(b.get(4), &r(-1, 30));
        assert_eq!(b.get(12), &r(-691, 2730));
        assert_eq!(b.get(16), &r(-3617, 510));
        assert_eq!(b.even_over_factorial(1), r(1, 12));
    }

    #[test]
    fn odd_values_vanish() {
        let mut b = Bernoulli::default();
        for n in (3..60).step_by(2) {
            assert!(b.get(n).is_zero());
        }
    }
}
