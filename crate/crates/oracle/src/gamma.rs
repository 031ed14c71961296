use astro_float::BigFloat as Big;

use crate::{Oracle, OracleError};

impl Oracle {
    /// `log Γ(z)` for `z > 0`: Stirling series at `z + M >= tail_terms`,
    /// shifted back with the recurrence.
    pub fn ln_gamma(&mut self, z: &Big) -> Result<Big, OracleError> {
        if !z.is_positive() || z.is_zero() {
            return Err(OracleError::Domain("log-gamma needs z > 0".into()));
        }
        let (w, product) = self.shift_up(z);
        let target = self.target();
        for level in 0..=self.cfg.max_escalations {
            let (_, order) = self.cfg.escalated(level);
            let order = 2 * order;
            let hp = &mut self.hp;
            // (w - 1/2) ln w - w + ln(2π)/2
            let ln_w = hp.ln(&w);
            let half = hp.f64(0.5);
            let mut sum = hp.sub(&hp.mul(&hp.sub(&w, &half), &ln_w), &w);
            let pi = hp.pi();
            let two_pi = hp.mul(&pi, &hp.int(2));
            let ln_two_pi = hp.ln(&two_pi);
            sum = hp.add(&sum, &hp.mul(&ln_two_pi, &half));
            // Σ B_{2k} / (2k (2k-1) w^{2k-1})
            let inv_w = hp.recip(&w);
            let inv_w2 = hp.mul(&inv_w, &inv_w);
            let mut power = inv_w;
            let mut next = hp.zero();
            for k in 1..=order + 1 {
                let b = self.bernoulli.get(2 * k).clone();
                let hp = &mut self.hp;
                let b = hp.rational(&b);
                let denom = hp.int((2 * k * (2 * k - 1)) as i64);
                let term = hp.div(&hp.mul(&b, &power), &denom);
                if k <= order {
                    sum = hp.add(&sum, &term);
                } else {
                    next = term.abs();
                }
                power = hp.mul(&power, &inv_w2);
            }
            if next.cmp(&target).is_some_and(|c| c <= 0) {
                let hp = &mut self.hp;
                let ln_product = hp.ln(&product);
                return Ok(hp.sub(&sum, &ln_product));
            }
        }
        Err(OracleError::Config(
            "Stirling series did not reach target".into(),
        ))
    }

    /// `Γ(z)` for real `z` off the non-positive integers.
    pub fn gamma(&mut self, z: f64) -> Result<Big, OracleError> {
        if !z.is_finite() || (z <= 0.0 && z.fract() == 0.0) {
            return Err(OracleError::Domain(format!("gamma undefined at {z}")));
        }
        if z > 0.0 {
            let zb = self.hp.f64(z);
            let l = self.ln_gamma(&zb)?;
            return Ok(self.hp.exp(&l));
        }
        // Γ(z) = π / (sin(πz) Γ(1 - z))
        let g = self.gamma(1.0 - z)?;
        let hp = &mut self.hp;
        let pi = hp.pi();
        let angle = hp.mul(&pi, &hp.f64(z));
        let sine = hp.sin(&angle);
        Ok(hp.div(&pi, &hp.mul(&sine, &g)))
    }

    /// Digamma `ψ(z)` for `z > 0`.
    pub fn digamma(&mut self, z: &Big) -> Result<Big, OracleError> {
        if !z.is_positive() || z.is_zero() {
            return Err(OracleError::Domain("digamma needs z > 0".into()));
        }
        let target = self.target();
        let hp = &mut self.hp;
        let mut w = z.clone();
        let mut shift = hp.zero();
        let start = hp.int(self.cfg.tail_terms as i64);
        while w.cmp(&start).is_some_and(|c| c < 0) {
            shift = hp.add(&shift, &hp.recip(&w));
            w = hp.add(&w, &hp.int(1));
        }
        for level in 0..=self.cfg.max_escalations {
            let (_, order) = self.cfg.escalated(level);
            let order = 2 * order;
            let hp = &mut self.hp;
            // ln w - 1/(2w) - Σ B_{2k} / (2k w^{2k})
            let ln_w = hp.ln(&w);
            let mut sum = hp.sub(&ln_w, &hp.recip(&hp.mul(&w, &hp.int(2))));
            let inv_w = hp.recip(&w);
            let inv_w2 = hp.mul(&inv_w, &inv_w);
            let mut power = inv_w2.clone();
            let mut next = hp.zero();
            for k in 1..=order + 1 {
                let b = self.bernoulli.get(2 * k).clone();
                let hp = &mut self.hp;
                let b = hp.rational(&b);
                let term = hp.div(&hp.mul(&b, &power), &hp.int(2 * k as i64));
                if k <= order {
                    sum = hp.sub(&sum, &term);
                } else {
                    next = term.abs();
                }
                power = hp.mul(&power, &inv_w2);
            }
            if next.cmp(&target).is_some_and(|c| c <= 0) {
                return Ok(self.hp.sub(&sum, &shift));
            }
        }
        Err(OracleError::Config(
            "digamma series did not reach target".into(),
        ))
    }

    /// Euler–Mascheroni constant `γ = -ψ(1)`.
    pub fn euler_gamma(&mut self) -> Result<Big, OracleError> {
        let one = self.hp.int(1);
        Ok(self.digamma(&one)?.neg())
    }

    /// Polygamma `ψ_n(z) = (-1)^{n+1} n! ζ(n+1, z)` for `n >= 1`, `z > 0`.
    pub fn polygamma(&mut self, n: u32, z: &Big) -> Result<Big, OracleError> {
        if n == 0 {
            return self.digamma(z);
        }
        let s = self.hp.int(n as i64 + 1);
        let zeta = self.hurwitz_zeta_big(&s, z)?;
        let factorial = self.hp.bigint(&crate::bernoulli::factorial(n as usize));
        let v = self.hp.mul(&zeta, &factorial);
        Ok(if n.is_multiple_of(2) { v.neg() } else { v })
    }

    /// `(z + M, Π_{k<M} (z + k))` with `z + M >= tail_terms`.
    fn shift_up(&mut self, z: &Big) -> (Big, Big) {
        let hp = &mut self.hp;
        let start = hp.int(self.cfg.tail_terms as i64);
        let mut w = z.clone();
        let mut product = hp.int(1);
        while w.cmp(&start).is_some_and(|c| c < 0) {
            product = hp.mul(&product, &w);
            w = hp.add(&w, &hp.int(1));
        }
        (w, product)
    }
}

#[cfg(test)]
mod tests {
    use crate::{to_f64, Oracle, OracleConfig};

    #[test]
    fn gamma_values() {
        let mut o = Oracle::new(OracleConfig::default()).unwrap();
        assert_eq!(to_f64(&o.gamma(5.0).unwrap()), 24.0);
        // √π = 1.77245385090551602729816748334…
        let sqrt_pi = 1.772453850905516;
        assert_eq!(to_f64(&o.gamma(0.5).unwrap()), sqrt_pi);
        assert_eq!(to_f64(&o.gamma(-0.5).unwrap()), -2.0 * sqrt_pi);
        assert!(o.gamma(-2.0).is_err());
    }

    #[test]
    fn euler_constant() {
        let mut o = Oracle::new(OracleConfig::default()).unwrap();
        assert_eq!(to_f64(&o.euler_gamma().unwrap()), 0.5772156649015329);
    }

    #[test]
    fn trigamma_at_one() {
        let mut o = Oracle::new(OracleConfig::default()).unwrap();
        let one = o.hp().int(1);
        let v = o.polygamma(1, &one).unwrap();
        let pi = std::f64::consts::PI;
        assert_eq!(to_f64(&v), pi * pi / 6.0);
        let v = o.polygamma(2, &one).unwrap();
        assert_eq!(to_f64(&v), -2.0 * 1.2020569031595942);
    }
}
