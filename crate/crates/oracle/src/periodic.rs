use std::collections::HashMap;

use astro_float::BigFloat as Big;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Oracle, OracleError};

/// Largest reduced denominator summed exactly by residue classes.
pub const MAX_EXACT_DENOMINATOR: usize = 4096;
/// Largest denominator tried when approximating a general `x` by a rational.
const MAX_APPROX_DENOMINATOR: i64 = 1024;
/// Largest `|x - p/q|` bridged by the Taylor correction, as a power of two.
const MAX_OFFSET_LOG2: i32 = -40;
const MAX_TAYLOR_ORDER: usize = 8;

/// `x mod 1`, folded into `[0, 1/2]`, as `p/q + δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalPoint {
    pub p: usize,
    pub q: usize,
    pub offset: BigRational,
}

/// `D_r = Σ_{m ≥ 0} (mq + r)^{-e}` for `r = 1..=q`, continued analytically in `e`.
struct ClassSums {
    sums: Vec<Big>,
    err: Big,
}

pub(crate) fn rationalize(x: f64) -> Result<RationalPoint, OracleError> {
    let exact = BigRational::from_float(x)
        .ok_or_else(|| OracleError::Domain(format!("x must be finite, got {x}")))?;
    let mut frac = &exact - exact.floor();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if frac > half {
        frac = BigRational::one() - frac;
    }
    if let Some(q) = frac
        .denom()
        .to_usize()
        .filter(|q| *q <= MAX_EXACT_DENOMINATOR)
    {
        return Ok(RationalPoint {
            p: frac
                .numer()
                .to_usize()
                .expect("numerator below denominator"),
            q,
            offset: BigRational::zero(),
        });
    }
    // Continued-fraction convergents h/k of frac.
    let tolerance = BigRational::new(BigInt::one(), BigInt::one() << (-MAX_OFFSET_LOG2) as usize);
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = frac.clone();
    let mut best = None;
    loop {
        let a = rest.floor().to_integer();
        let h = &a * &h1 + &h0;
        let k = &a * &k1 + &k0;
        if k > BigInt::from(MAX_APPROX_DENOMINATOR) {
            break;
        }
        let offset = &frac - BigRational::new(h.clone(), k.clone());
        if offset.abs() <= tolerance && !h.is_zero() {
            best = Some((h.clone(), k.clone(), offset.clone()));
        }
        let remainder = &rest - BigRational::from_integer(a);
        if remainder.is_zero() {
            break;
        }
        rest = remainder.recip();
        (h0, h1, k0, k1) = (h1, h, k1, k);
    }
    match best {
        Some((h, k, offset)) => Ok(RationalPoint {
            p: h.to_usize().expect("small numerator"),
            q: k.to_usize().expect("small denominator"),
            offset,
        }),
        None => Err(OracleError::Config(format!(
            "x = {x:e} has no rational approximation with denominator <= {MAX_APPROX_DENOMINATOR} \
             within 2^{MAX_OFFSET_LOG2}"
        ))),
    }
}

impl Oracle {
    /// `Re F(x, s) = Σ_{n ≥ 1} cos(2πnx) / n^s` for `s > 0` (`x mod 1 != 0` when `s <= 1`).
    ///
    /// The series is split into residue classes modulo the denominator `q` of
    /// `x = p/q`; each class is a shifted Hurwitz zeta summed directly for
    /// `tail_terms` terms with an Euler–Maclaurin remainder. Points that are not
    /// small-denominator rationals are reached from the nearest suitable `p/q`
    /// by a Taylor series in `x`.
    pub fn periodic_zeta_real(&mut self, x: f64, s: f64) -> Result<Big, OracleError> {
        if !s.is_finite() || s <= 0.0 {
            return Err(OracleError::Domain(format!("s must be positive, got {s}")));
        }
        let point = rationalize(x)?;
        if point.p == 0 {
            if !point.offset.is_zero() {
                return Err(OracleError::Config(format!("x = {x:e} is too close to 0")));
            }
            if s <= 1.0 {
                return Err(OracleError::Domain(format!(
                    "Re F(0, s) diverges for s = {s} <= 1"
                )));
            }
            return self.riemann_zeta(s);
        }
        let offset = self.hp.rational(&point.offset);
        let mut values = self.periodic_grid_with_offset(s, point.q, &[point.p], &offset)?;
        Ok(values.pop().expect("one value per numerator"))
    }

    /// `Re F(p/q, s)` for each numerator `p` (all with `p mod q != 0`), sharing
    /// the class sums across the grid.
    pub fn periodic_zeta_grid(
        &mut self,
        s: f64,
        q: usize,
        numerators: &[usize],
    ) -> Result<Vec<Big>, OracleError> {
        if !s.is_finite() || s <= 0.0 {
            return Err(OracleError::Domain(format!("s must be positive, got {s}")));
        }
        if numerators.iter().any(|p| p % q == 0) {
            return Err(OracleError::Domain("grid contains an integer point".into()));
        }
        let zero = self.hp.zero();
        self.periodic_grid_with_offset(s, q, numerators, &zero)
    }

    fn periodic_grid_with_offset(
        &mut self,
        s: f64,
        q: usize,
        numerators: &[usize],
        offset: &Big,
    ) -> Result<Vec<Big>, OracleError> {
        let target = self.target();
        let s_big = self.hp.f64(s);
        let two_pi = {
            let pi = self.hp.pi();
            self.hp.mul(&pi, &self.hp.int(2))
        };
        let mut worst = 0.0f64;
        'levels: for level in 0..=self.cfg.max_escalations {
            let (terms, order) = self.cfg.escalated(level);
            let mut values = vec![self.hp.zero(); numerators.len()];
            let mut errors = vec![self.hp.zero(); numerators.len()];
            let mut scales = vec![self.hp.zero(); numerators.len()];
            // Last Taylor term taken; bounds the remainder once the terms shrink.
            let mut last = vec![self.hp.zero(); numerators.len()];
            // (2π δ)^j / j!
            let mut taylor = self.hp.int(1);
            let step = self.hp.mul(&two_pi, offset);
            for j in 0..=MAX_TAYLOR_ORDER {
                let exponent = self.hp.sub(&s_big, &self.hp.int(j as i64));
                let classes = self.class_sums(&exponent, q, terms, order)?;
                let mut settled = true;
                for (i, &p) in numerators.iter().enumerate() {
                    let (sum, abs_sum) = self.combine(&classes.sums, q, p, j);
                    let term = self.hp.mul(&taylor, &sum);
                    values[i] = self.hp.add(&values[i], &term);
                    let err = self.hp.mul(&taylor.abs(), &classes.err);
                    errors[i] = self.hp.add(&errors[i], &err);
                    if j == 0 {
                        scales[i] = abs_sum;
                    } else {
                        last[i] = term.abs();
                        let small = self.hp.mul(&values[i].abs(), &target);
                        if term.abs().cmp(&small).is_some_and(|c| c > 0) {
                            settled = false;
                        }
                    }
                }
                if offset.is_zero() || (j > 0 && settled) {
                    break;
                }
                if j == MAX_TAYLOR_ORDER {
                    return Err(OracleError::Config(
                        "Taylor correction in x did not converge".into(),
                    ));
                }
                taylor = self
                    .hp
                    .div(&self.hp.mul(&taylor, &step), &self.hp.int(j as i64 + 1));
            }
            for i in 0..numerators.len() {
                errors[i] = self.hp.add(&errors[i], &last[i]);
                // Relative to the value, or to the class-sum scale when the
                // value itself nearly cancels.
                let mut floor = scales[i].clone();
                floor.set_exponent(floor.exponent().unwrap_or(0) - 32);
                let reference = values[i].abs().max(&floor);
                let bound = self.hp.mul(&reference, &target);
                if errors[i].cmp(&bound).is_some_and(|c| c > 0) {
                    worst = worst.max(crate::to_f64(&self.hp.div(&errors[i], &reference)));
                    continue 'levels;
                }
            }
            return Ok(values);
        }
        Err(OracleError::Config(format!(
            "periodic zeta at s = {s}: relative truncation error {worst:e} above target"
        )))
    }

    /// `Σ_r cos(2π r p/q + jπ/2) D_r` and `Σ_r |D_r|`.
    fn combine(&mut self, sums: &[Big], q: usize, p: usize, j: usize) -> (Big, Big) {
        let quarter = self.quarter_cosines(q);
        let mut acc = self.hp.zero();
        let mut abs = self.hp.zero();
        for (idx, d) in sums.iter().enumerate() {
            let r = idx + 1;
            // angle = 2π k / (4q)
            let k = (4 * ((r * p) % q) + j * q) % (4 * q);
            let (quadrant, b) = (k / q, k % q);
            let w = match quadrant {
                0 => quarter[b].clone(),
                1 => quarter[q - b].neg(),
                2 => quarter[b].neg(),
                _ => quarter[q - b].clone(),
            };
            acc = self.hp.add(&acc, &self.hp.mul(&w, d));
            abs = self.hp.add(&abs, &d.abs());
        }
        (acc, abs)
    }

    /// `cos(π b / (2q))` for `b = 0..=q`.
    fn quarter_cosines(&mut self, q: usize) -> std::rc::Rc<Vec<Big>> {
        type Cache = HashMap<(usize, usize), std::rc::Rc<Vec<Big>>>;
        thread_local! {
            static CACHE: std::cell::RefCell<Cache> = std::cell::RefCell::new(HashMap::new());
        }
        let key = (q, self.hp.precision());
        if let Some(hit) = CACHE.with(|c| c.borrow().get(&key).cloned()) {
            return hit;
        }
        let pi = self.hp.pi();
        let unit = self.hp.div(&pi, &self.hp.int(2 * q as i64));
        let mut table = Vec::with_capacity(q + 1);
        for b in 0..=q {
            let angle = self.hp.mul(&unit, &self.hp.int(b as i64));
            table.push(if b == q {
                self.hp.zero()
            } else {
                self.hp.cos(&angle)
            });
        }
        let table = std::rc::Rc::new(table);
        CACHE.with(|c| c.borrow_mut().insert(key, table.clone()));
        table
    }

    /// Class sums at exponent `e` with the constant `1/(q(e-1))` removed from
    /// every class. The constant cancels in any combination whose weights sum
    /// to zero, which holds for every `p/q` off the integers, and removing it
    /// keeps `e` near 1 free of cancellation.
    fn class_sums(
        &mut self,
        e: &Big,
        q: usize,
        terms: usize,
        order: usize,
    ) -> Result<ClassSums, OracleError> {
        let limit = q * (terms + 1);
        let powers = self.negative_powers(e, limit);
        let one = self.hp.int(1);
        let q_big = self.hp.int(q as i64);

        // B_{2k}/(2k)! (e)_{2k-1}, k = 1..=order+1
        let mut corrections = Vec::with_capacity(order + 1);
        let mut rising = e.clone();
        for k in 1..=order + 1 {
            let ratio = self.bernoulli_ratio(k);
            corrections.push(self.hp.mul(&ratio, &rising));
            let m = self.hp.int(2 * k as i64 - 1);
            let f1 = self.hp.add(e, &m);
            let f2 = self.hp.add(&f1, &one);
            rising = self.hp.mul(&rising, &self.hp.mul(&f1, &f2));
        }

        let mut sums = Vec::with_capacity(q);
        let mut err = self.hp.zero();
        let one_minus_e = self.hp.sub(&one, e);
        for r in 1..=q {
            let hp = &mut self.hp;
            let mut d = hp.zero();
            for m in 0..terms {
                d = hp.add(&d, &powers[m * q + r]);
            }
            let n0 = q * terms + r;
            let p = &powers[n0];
            let a = hp.div(&hp.int(n0 as i64), &q_big);
            let log_n0 = hp.ln(&hp.int(n0 as i64));
            let w = hp.mul(&one_minus_e, &log_n0);
            let ratio = expm1_over_x(hp, &w);
            // (n0^{1-e} - 1) / (q (e-1))
            let pole = hp.div(&hp.mul(&log_n0, &ratio), &q_big).neg();
            d = hp.add(&d, &pole);
            d = hp.add(&d, &hp.div(p, &hp.int(2)));
            let inv_a = hp.recip(&a);
            let inv_a2 = hp.mul(&inv_a, &inv_a);
            let mut scaled = hp.mul(p, &inv_a); // P A^{1-2k}
            for (k, c) in corrections.iter().enumerate() {
                let t = hp.mul(c, &scaled);
                if k < order {
                    d = hp.add(&d, &t);
                } else {
                    err = hp.add(&err, &t.abs());
                }
                scaled = hp.mul(&scaled, &inv_a2);
            }
            sums.push(d);
        }
        Ok(ClassSums { sums, err })
    }

    /// `n^{-e}` for `n = 0..=limit` (index 0 unused), exponentiating only at primes.
    fn negative_powers(&mut self, e: &Big, limit: usize) -> Vec<Big> {
        let mut smallest = vec![0usize; limit + 1];
        for n in 2..=limit {
            if smallest[n] == 0 {
                let mut m = n;
                while m <= limit {
                    if smallest[m] == 0 {
                        smallest[m] = n;
                    }
                    m += n;
                }
            }
        }
        if self.ln_primes.len() <= limit {
            self.ln_primes.resize(limit + 1, None);
        }
        let minus_e = e.neg();
        let mut powers = Vec::with_capacity(limit + 1);
        powers.push(self.hp.zero());
        if limit >= 1 {
            powers.push(self.hp.int(1));
        }
        for n in 2..=limit {
            let p = smallest[n];
            let v = if p == n {
                let log_p = match &self.ln_primes[n] {
                    Some(l) => l.clone(),
                    None => {
                        let l = self.hp.ln(&self.hp.int(n as i64));
                        self.ln_primes[n] = Some(l.clone());
                        l
                    }
                };
                let t = self.hp.mul(&minus_e, &log_p);
                self.hp.exp(&t)
            } else {
                self.hp.mul(&powers[p], &powers[n / p])
            };
            powers.push(v);
        }
        powers
    }
}

/// `(e^w - 1)/w`, equal to 1 at `w = 0`.
fn expm1_over_x(hp: &mut crate::Hp, w: &Big) -> Big {
    let half = hp.f64(0.5);
    if w.abs().cmp(&half).is_some_and(|c| c >= 0) {
        let e = hp.exp(w);
        return hp.div(&hp.sub(&e, &hp.int(1)), w);
    }
    let mut sum = hp.int(1);
    let mut term = hp.int(1);
    let mut tiny = hp.int(1);
    tiny.set_exponent(-(hp.precision() as i32) - 8);
    for j in 2.. {
        term = hp.div(&hp.mul(&term, w), &hp.int(j));
        if term.abs().cmp(&tiny).is_some_and(|c| c < 0) {
            break;
        }
        sum = hp.add(&sum, &term);
    }
    sum
}
