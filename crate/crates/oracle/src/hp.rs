//! Thin wrapper over `astro_float` fixing precision and rounding mode.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as IntSign};
use num_rational::BigRational;

use crate::OracleError;

const RM: RoundingMode = RoundingMode::ToEven;

/// Working-precision arithmetic context.
pub struct Hp {
    p: usize,
    cc: Consts,
}

impl std::fmt::Debug for Hp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hp").field("p", &self.p).finish()
    }
}

impl Hp {
    pub fn new(p: usize) -> Result<Self, OracleError> {
        let cc = Consts::new().map_err(|e| OracleError::Arithmetic(format!("{e:?}")))?;
        Ok(Hp { p, cc })
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    pub fn f64(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.p.max(64))
    }

    pub fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.p.max(64))
    }

    pub fn zero(&self) -> BigFloat {
        self.int(0)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }

    pub fn recip(&self, a: &BigFloat) -> BigFloat {
        a.reciprocal(self.p, RM)
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.p, RM, &mut self.cc)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, RM, &mut self.cc)
    }

    pub fn cos(&mut self, a: &BigFloat) -> BigFloat {
        a.cos(self.p, RM, &mut self.cc)
    }

    pub fn sin(&mut self, a: &BigFloat) -> BigFloat {
        a.sin(self.p, RM, &mut self.cc)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    /// `a^e` for `a > 0`.
    pub fn pow(&mut self, a: &BigFloat, e: &BigFloat) -> BigFloat {
        let l = self.ln(a);
        let t = self.mul(e, &l);
        self.exp(&t)
    }

    pub fn rational(&self, r: &BigRational) -> BigFloat {
        let n = self.bigint(r.numer());
        let d = self.bigint(r.denom());
        self.div(&n, &d)
    }

    pub fn bigint(&self, v: &BigInt) -> BigFloat {
        let (sign, digits) = v.to_u64_digits();
        let p = self.p.max(64);
        let base = BigFloat::from_u128(1u128 << 64, p);
        let mut acc = self.zero();
        for d in digits.iter().rev() {
            acc = acc.mul(&base, p, RM).add(&BigFloat::from_u64(*d, p), p, RM);
        }
        if sign == IntSign::Minus {
            acc.neg()
        } else {
            acc
        }
    }

    /// Decimal rendering with `digits` significant digits, as `d.ddd…e±x`.
    pub fn to_decimal(&mut self, v: &BigFloat, digits: usize) -> String {
        if v.is_zero() {
            return format!("{:.*}e0", digits - 1, 0.0);
        }
        // Scale into [10^{digits-1}, 10^digits) and round to an integer.
        let approx = to_f64(v).abs();
        let mut e10 = approx.log10().floor() as i64;
        let mut mantissa;
        loop {
            let shift = digits as i64 - 1 - e10;
            let ten = self.int(10);
            let scale = ten.powi(shift.unsigned_abs() as usize, self.p, RM);
            let scaled = if shift >= 0 {
                self.mul(&v.abs(), &scale)
            } else {
                self.div(&v.abs(), &scale)
            };
            let half = self.f64(0.5);
            let rounded = self.add(&scaled, &half).floor();
            mantissa = bigfloat_to_u128(&rounded);
            if mantissa >= 10u128.pow(digits as u32) {
                e10 += 1;
            } else if mantissa < 10u128.pow(digits as u32 - 1) {
                e10 -= 1;
            } else {
                break;
            }
        }
        let text = mantissa.to_string();
        let sign = if v.is_negative() { "-" } else { "" };
        format!("{sign}{}.{}e{e10}", &text[..1], &text[1..])
    }
}

fn bigfloat_to_u128(v: &BigFloat) -> u128 {
    // Exact for non-negative integers below 2^128.
    let (m, _, _, e, _) = v.as_raw_parts().expect("finite value");
    if v.is_zero() {
        return 0;
    }
    let words = m.len();
    let top = ((m[words - 1] as u128) << 64) | if words > 1 { m[words - 2] as u128 } else { 0 };
    let shift = 128 - e as i64;
    if shift >= 128 {
        0
    } else {
        top >> shift
    }
}

/// Rounds to the nearest `f64`.
pub fn to_f64(v: &BigFloat) -> f64 {
    if v.is_nan() {
        return f64::NAN;
    }
    if v.is_inf_pos() {
        return f64::INFINITY;
    }
    if v.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if v.is_zero() {
        return 0.0;
    }
    let (m, _, sign, e, _) = v.as_raw_parts().expect("finite value");
    let words = m.len();
    let hi = m[words - 1] as u128;
    let lo = if words > 1 { m[words - 2] as u128 } else { 0 };
    // Fold any lower words into a sticky bit so the u128 -> f64 rounding is exact.
    let sticky = m[..words.saturating_sub(2)].iter().any(|w| *w != 0) as u128;
    let top = (hi << 64) | lo | sticky;
    let magnitude = ldexp(top as f64, e - 128);
    if sign == Sign::Neg {
        -magnitude
    } else {
        magnitude
    }
}

fn ldexp(mut v: f64, mut e: i32) -> f64 {
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
    }
    v * 2f64.powi(e)
}
