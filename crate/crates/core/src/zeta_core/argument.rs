use crate::error::{check_finite, Result};

/// `x` folded into `[0, 1/2]` using periodicity and evenness of `Re F(·, s)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ReducedArgument(f64);

impl ReducedArgument {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Folds `x` into `[0, 1/2]`.
///
/// All steps are exact in floating point, so `x` and `-x` always reduce to the
/// same value, and so do `x` and `x + 1` whenever `x + 1` is itself exact.
pub fn reduce_argument(x: f64) -> Result<ReducedArgument> {
    check_finite("x", x)?;
    // Evenness first: for a >= 0, a - floor(a) is exact.
    let a = x.abs();
    let frac = a - a.floor();
    let folded = if frac > 0.5 { 1.0 - frac } else { frac };
    Ok(ReducedArgument(folded))
}

/// Position of `s` relative to the even and odd integers.
///
/// Near an odd integer `m = 1 + q` the Hurwitz-sum expansion has a zero that
/// must be resolved analytically; near an even integer the zero sits in the
/// trigonometric factor instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SDecomposition {
    pub s: f64,
    /// Nearest even integer to `s`.
    pub m_even: f64,
    /// `s - m_even`, in `[-1, 1]`.
    pub r_even: f64,
    /// Present when `s` lies within 1/2 of an odd integer `>= 1`.
    pub odd: Option<OddSplit>,
}

/// `s = 1 + q + u` with `q` even and `|u| <= 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddSplit {
    pub q: u32,
    pub u: f64,
}

impl SDecomposition {
    pub fn new(s: f64) -> Self {
        let m_even = 2.0 * (0.5 * s).round();
        let r_even = s - m_even;
        let m_odd = 2.0 * (0.5 * (s - 1.0)).round() + 1.0;
        // Exact by Sterbenz whenever |s - m_odd| <= 1/2 and m_odd >= 1.
        let u = s - m_odd;
        let odd = (m_odd >= 1.0 && u.abs() <= 0.5).then_some(OddSplit {
            q: (m_odd - 1.0) as u32,
            u,
        });
        SDecomposition {
            s,
            m_even,
            r_even,
            odd,
        }
    }
}

/// Reduces `y` to `k/2 + r` with `|r| <= 1/4`; returns `(k mod 4, π r)`.
fn quarter_turns(y: f64) -> (u8, f64) {
    let k = (2.0 * y).round();
    let r = y - 0.5 * k;
    let k_mod4 = (k % 4.0 + 4.0) % 4.0;
    (k_mod4 as u8, std::f64::consts::PI * r)
}

/// `sin(π y)` with exact zeros at the integers.
pub fn sin_pi(y: f64) -> f64 {
    let (k, theta) = quarter_turns(y);
    match k {
        0 => theta.sin(),
        1 => theta.cos(),
        2 => -theta.sin(),
        _ => -theta.cos(),
    }
}

/// `cos(π y)` with exact zeros at the half-integers.
pub fn cos_pi(y: f64) -> f64 {
    let (k, theta) = quarter_turns(y);
    match k {
        0 => theta.cos(),
        1 => -theta.sin(),
        2 => -theta.cos(),
        _ => theta.sin(),
    }
}

/// `cos(2π n x)` with the phase `n x mod 1` formed without rounding loss.
pub(crate) fn cos_two_pi_multiple(n: u32, x: f64) -> f64 {
    let n = n as f64;
    let hi = n * x;
    let lo = n.mul_add(x, -hi);
    let frac = hi - hi.floor();
    cos_pi(2.0 * (frac + lo))
}

/// `(2π)^e`, carrying `ln 2π` to double-double precision.
pub(crate) fn pow_two_pi(e: f64) -> f64 {
    const LN_2PI_HI: f64 = 1.8378770664093456;
    const LN_2PI_LO: f64 = -7.756588316134483e-17;
    let hi = e * LN_2PI_HI;
    let lo = e.mul_add(LN_2PI_HI, -hi) + e * LN_2PI_LO;
    let base = hi.exp();
    base.mul_add(lo, base)
}
