use astro_float::BigFloat as Big;

use crate::{Oracle, OracleError};

impl Oracle {
    /// Hurwitz zeta `ζ(s, a) = Σ_{k ≥ 0} (k + a)^{-s}` for `a > 0`, `s != 1`.
    ///
    /// Direct terms up to `tail_terms`, then an Euler–Maclaurin tail whose first
    /// omitted correction serves as the error estimate.
    pub fn hurwitz_zeta(&mut self, s: f64, a: f64) -> Result<Big, OracleError> {
        if !s.is_finite() || !a.is_finite() {
            return Err(OracleError::Domain("non-finite argument".into()));
        }
        let (s, a) = (self.hp.f64(s), self.hp.f64(a));
        self.hurwitz_zeta_big(&s, &a)
    }

    pub fn hurwitz_zeta_big(&mut self, s: &Big, a: &Big) -> Result<Big, OracleError> {
        if !a.is_positive() || a.is_zero() {
            return Err(OracleError::Domain("Hurwitz zeta needs a > 0".into()));
        }
        if s.cmp(&self.hp.int(1)) == Some(0) {
            return Err(OracleError::Domain(
                "pole of the Hurwitz zeta at s = 1".into(),
            ));
        }
        let target = self.target();
        let mut last_err = None;
        for level in 0..=self.cfg.max_escalations {
            let (terms, order) = self.cfg.escalated(level);
            let (value, err) = self.hurwitz_em(s, a, terms, order);
            let bound = self.hp.mul(&target, &value.abs());
            if err.cmp(&bound).is_some_and(|c| c <= 0) {
                return Ok(value);
            }
            last_err = Some(err);
        }
        Err(OracleError::Config(format!(
            "Hurwitz zeta truncation error {:e} above target",
            crate::to_f64(&last_err.unwrap_or_else(|| self.hp.zero()))
        )))
    }

    /// Riemann zeta for `s != 1`.
    pub fn riemann_zeta(&mut self, s: f64) -> Result<Big, OracleError> {
        self.hurwitz_zeta(s, 1.0)
    }

    fn hurwitz_em(&mut self, s: &Big, a: &Big, terms: usize, order: usize) -> (Big, Big) {
        let hp = &mut self.hp;
        let minus_s = s.neg();
        let mut sum = hp.zero();
        for k in 0..terms {
            let base = hp.add(a, &hp.int(k as i64));
            let t = hp.pow(&base, &minus_s);
            sum = hp.add(&sum, &t);
        }
        let b = hp.add(a, &hp.int(terms as i64));
        let power = hp.pow(&b, &minus_s); // b^{-s}
        let one = hp.int(1);
        let s_minus_1 = hp.sub(s, &one);
        let integral = hp.div(&hp.mul(&power, &b), &s_minus_1);
        let half = hp.div(&power, &hp.int(2));
        sum = hp.add(&sum, &integral);
        sum = hp.add(&sum, &half);

        // B_{2k}/(2k)! (s)_{2k-1} b^{-s-2k+1}
        let inv_b = hp.recip(&b);
        let inv_b2 = hp.mul(&inv_b, &inv_b);
        let mut rising = s.clone();
        let mut scaled = hp.mul(&power, &inv_b);
        let mut next = hp.zero();
        for k in 1..=order + 1 {
            let hp = &mut self.hp;
            let term = hp.mul(&rising, &scaled);
            let ratio = self.bernoulli_ratio(k);
            let hp = &mut self.hp;
            let term = hp.mul(&term, &ratio);
            if k <= order {
                sum = hp.add(&sum, &term);
            } else {
                next = term.abs();
            }
            let m = hp.int(2 * k as i64 - 1);
            let f1 = hp.add(s, &m);
            let f2 = hp.add(&f1, &one);
            rising = hp.mul(&rising, &hp.mul(&f1, &f2));
            scaled = hp.mul(&scaled, &inv_b2);
        }
        (sum, next)
    }
}

#[cfg(test)]
mod tests {
    use crate::{to_f64, Oracle, OracleConfig};

    #[test]
    fn negative_integer_is_bernoulli_polynomial() {
        let mut o = Oracle::new(OracleConfig::default()).unwrap();
        // ζ(-1, 1/2) = -B_2(1/2)/2 = 1/24
        let v = o.hurwitz_zeta(-1.0, 0.5).unwrap();
        assert_eq!(to_f64(&v), 1.0 / 24.0);
    }

    #[test]
    fn riemann_values() {
        let mut o = Oracle::new(OracleConfig::default()).unwrap();
        let pi = std::f64::consts::PI;
        assert_eq!(to_f64(&o.riemann_zeta(2.0).unwrap()), pi * pi / 6.0);
        assert_eq!(to_f64(&o.riemann_zeta(-0.5).unwrap()), -0.20788622497735457);
    }

    #[test]
    fn pole_rejected() {
        let mut o = Oracle::new(OracleConfig::default()).unwrap();
        assert!(o.hurwitz_zeta(1.0, 0.5).is_err());
        assert!(o.hurwitz_zeta(2.0, 0.0).is_err());
    }
}
