use astro_float::BigFloat as Big;
use num_bigint::BigInt;

use crate::{Oracle, OracleConfig, OracleError};

/// Radius over which the ζ̃ series must be accurate (`riemann_zeta` uses it on
/// `[-1/2, 3/2]`).
pub const ZETA_TILDE_RADIUS: f64 = 1.5;
/// Radius over which the log-gamma series must be accurate.
pub const LOG_GAMMA_RADIUS: f64 = 0.5;
/// Truncation threshold: the first omitted term at the radius is below `2^-60`.
pub const TRUNCATION_LOG2: i32 = -60;
/// Even shifts `q` with a log-gamma row.
pub const SHIFTS: [u32; 6] = [0, 2, 4, 6, 8, 10];
/// Significant digits written per coefficient.
pub const DIGITS: usize = 34;
/// Upper limit on computed series length before truncation.
const MAX_ORDER: usize = 120;

/// High-precision coefficient tables, ready to be rendered as text.
#[derive(Debug, Clone)]
pub struct GeneratedTables {
    pub config: OracleConfig,
    pub zeta_tilde: Vec<Big>,
    pub log_gamma: Vec<(u32, Vec<Big>)>,
}

/// Computes the Taylor coefficients of `ζ(s) - 1/(s-1)` about 0 and of
/// `log Γ(1+q+u) - log Γ(1+q)` about 0 for each shift in [`SHIFTS`].
pub fn generate_coefficient_tables(cfg: OracleConfig) -> Result<GeneratedTables, OracleError> {
    let mut oracle = Oracle::new(cfg)?;
    let zeta_tilde = oracle.zeta_tilde_series(MAX_ORDER)?;
    let zeta_tilde = truncate(zeta_tilde, ZETA_TILDE_RADIUS, 0)?;

    let mut rows = Vec::new();
    for q in SHIFTS {
        rows.push((q, oracle.log_gamma_series(q, MAX_ORDER)?));
    }
    // One common length, fixed by the slowest-decaying row (q = 0).
    let base = truncate(rows[0].1.clone(), LOG_GAMMA_RADIUS, 1)?;
    let len = base.len();
    let log_gamma = rows
        .into_iter()
        .map(|(q, mut c)| {
            c.truncate(len);
            (q, c)
        })
        .collect();
    Ok(GeneratedTables {
        config: cfg,
        zeta_tilde,
        log_gamma,
    })
}

/// Keeps coefficients up to the first index whose term at `radius` drops
/// below the threshold (checking a few more to skip isolated small values).
/// `first_power` is the power of the variable multiplying `coeffs[0]`.
fn truncate(mut coeffs: Vec<Big>, radius: f64, first_power: i32) -> Result<Vec<Big>, OracleError> {
    let threshold = 2f64.powi(TRUNCATION_LOG2);
    let magnitude =
        |c: &Big, k: usize| crate::to_f64(c).abs() * radius.powi(k as i32 + first_power);
    for k in 0..coeffs.len().saturating_sub(3) {
        if (k..k + 3).all(|i| magnitude(&coeffs[i], i) < threshold) {
            coeffs.truncate(k);
            return Ok(coeffs);
        }
    }
    Err(OracleError::Config(format!(
        "series not truncatable below 2^{TRUNCATION_LOG2} within {} terms",
        coeffs.len()
    )))
}

impl GeneratedTables {
    /// Text accepted by `perzeta_core::CoefficientTables::from_text` and the
    /// core build script.
    pub fn render(&self) -> Result<String, OracleError> {
        let mut hp = crate::Hp::new(self.config.working_precision_bits + 64)?;
        let cfg = &self.config;
        let mut out = String::new();
        out.push_str(
            "# Generated by `cargo run -p perzeta-oracle --bin gen-tables`; do not edit.\n",
        );
        out.push_str(&format!(
            "# working_precision_bits={} tail_terms={} em_correction_order={}\n",
            cfg.working_precision_bits, cfg.tail_terms, cfg.em_correction_order
        ));
        out.push_str(&format!(
            "# [zeta_tilde]: Taylor coefficients about 0 of zeta(s) - 1/(s-1), s^0 first; \
             truncated for |s| <= {ZETA_TILDE_RADIUS}\n"
        ));
        out.push_str(&format!(
            "# [log_gamma q]: Taylor coefficients of log Gamma(1+q+u) - log Gamma(1+q), u^1 first; \
             truncated for |u| <= {LOG_GAMMA_RADIUS}\n"
        ));
        out.push_str("[zeta_tilde]\n");
        for c in &self.zeta_tilde {
            out.push_str(&hp.to_decimal(c, DIGITS));
            out.push('\n');
        }
        for (q, row) in &self.log_gamma {
            out.push_str(&format!("[log_gamma {q}]\n"));
            for c in row {
                out.push_str(&hp.to_decimal(c, DIGITS));
                out.push('\n');
            }
        }
        Ok(out)
    }

    pub fn to_core(&self) -> Result<perzeta_core::CoefficientTables, OracleError> {
        Ok(perzeta_core::CoefficientTables::from_text(&self.render()?)?)
    }
}

impl Oracle {
    /// Taylor coefficients `a_j` of `ζ̃(s) = ζ(s) - 1/(s-1) = Σ a_j s^j`.
    ///
    /// Euler–Maclaurin with cutoff `N` written as a power series in `s`:
    ///
    /// ```text
    /// ζ̃(s) = Σ_{n<N} n^{-s} - ∫_1^N y^{-s} dy + N^{-s}/2
    ///        + Σ_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1} + R(s)
    /// ```
    ///
    /// where each piece expands through `n^{-s} = Σ_j (-ln n)^j/j! s^j` and
    /// `∫_1^N y^{-s} dy = Σ_j (-s)^j/j! ∫_0^{ln N} t^j e^t dt`.
    pub fn zeta_tilde_series(&mut self, order: usize) -> Result<Vec<Big>, OracleError> {
        let n_cut = self.cfg.tail_terms;
        let k_max = 4 * self.cfg.em_correction_order;
        let mut tiny = self.hp.int(1);
        tiny.set_exponent(-(self.hp.precision() as i32) - 16);

        let mut coeffs = vec![self.hp.zero(); order];
        // Σ_{n<N} n^{-s}
        coeffs[0] = self.hp.int(1);
        for n in 2..n_cut {
            let hp = &mut self.hp;
            let minus_ln = hp.ln(&hp.int(n as i64)).neg();
            let series = exp_series(hp, &minus_ln, order);
            for (c, t) in coeffs.iter_mut().zip(&series) {
                *c = hp.add(c, t);
            }
        }
        let hp = &mut self.hp;
        let big_n = hp.int(n_cut as i64);
        let big_l = hp.ln(&big_n);
        let minus_l = big_l.neg();
        // e^{-sL} = Σ (-L)^i/i! s^i
        let decay = exp_series(hp, &minus_l, order);
        // N^{-s}/2
        for (c, t) in coeffs.iter_mut().zip(&decay) {
            *c = hp.add(c, &hp.div(t, &hp.int(2)));
        }
        // -∫_1^N y^{-s} dy: coefficient -(-1)^j/j! I_j with I_j = Σ_m L^{j+m+1}/(m!(j+m+1))
        let mut l_pow = big_l.clone(); // L^{j+1}
        let mut inv_fact = hp.int(1); // 1/j!
        for (j, c) in coeffs.iter_mut().enumerate() {
            let mut integral = hp.zero();
            let mut t = l_pow.clone(); // L^{j+m+1}/m!
            for m in 0.. {
                let piece = hp.div(&t, &hp.int((j + m + 1) as i64));
                integral = hp.add(&integral, &piece);
                if piece
                    .abs()
                    .cmp(&hp.mul(&integral.abs(), &tiny))
                    .is_some_and(|o| o < 0)
                {
                    break;
                }
                t = hp.div(&hp.mul(&t, &big_l), &hp.int(m as i64 + 1));
            }
            let mut contribution = hp.mul(&integral, &inv_fact);
            if j % 2 == 0 {
                contribution = contribution.neg();
            }
            *c = hp.add(c, &contribution);
            l_pow = hp.mul(&l_pow, &big_l);
            inv_fact = hp.div(&inv_fact, &hp.int(j as i64 + 1));
        }
        // Bernoulli corrections B_{2k}/(2k)! N^{1-2k} (s)_{2k-1} e^{-sL}
        let mut rising = vec![BigInt::from(0), BigInt::from(1)]; // (s)_1 = s
        for k in 1..=k_max + 1 {
            let ratio = self.bernoulli_ratio(k);
            let hp = &mut self.hp;
            let n_pow = hp.recip(&hp.int(n_cut as i64).powi(
                2 * k - 1,
                hp.precision(),
                astro_float::RoundingMode::ToEven,
            ));
            let scale = hp.mul(&ratio, &n_pow);
            let poly: Vec<Big> = rising.iter().map(|c| hp.bigint(c)).collect();
            let mut largest = hp.zero();
            for j in 0..order {
                let mut acc = hp.zero();
                for (i, p) in poly.iter().enumerate().take(j + 1) {
                    acc = hp.add(&acc, &hp.mul(p, &decay[j - i]));
                }
                let term = hp.mul(&scale, &acc);
                largest = largest.max(&term.abs());
                if k <= k_max {
                    coeffs[j] = hp.add(&coeffs[j], &term);
                }
            }
            if k == k_max + 1 {
                // The omitted correction bounds the remainder on |s| <= 1.
                let target = self.target();
                if largest.cmp(&target).is_some_and(|o| o > 0) {
                    return Err(OracleError::Config(
                        "zeta-tilde series: Euler-Maclaurin remainder above target".into(),
                    ));
                }
            }
            // (s)_{2k+1} = (s)_{2k-1} (s + 2k - 1)(s + 2k)
            for shift in [2 * k - 1, 2 * k] {
                rising = poly_mul_linear(&rising, shift);
            }
        }
        Ok(coeffs)
    }

    /// Taylor coefficients of `log Γ(1+q+u) - log Γ(1+q)`, `u^1` first:
    /// `ψ(1+q)` then `(-1)^k ζ(k, 1+q)/k` for `k >= 2`.
    pub fn log_gamma_series(&mut self, q: u32, order: usize) -> Result<Vec<Big>, OracleError> {
        let a = self.hp.int(1 + q as i64);
        let mut coeffs = Vec::with_capacity(order);
        coeffs.push(self.digamma(&a)?);
        for k in 2..=order {
            let s = self.hp.int(k as i64);
            let z = self.hurwitz_zeta_big(&s, &a)?;
            let c = self.hp.div(&z, &self.hp.int(k as i64));
            coeffs.push(if k % 2 == 0 { c } else { c.neg() });
        }
        Ok(coeffs)
    }
}

/// `Σ_i x^i/i!` coefficients, `i < order`.
fn exp_series(hp: &mut crate::Hp, x: &Big, order: usize) -> Vec<Big> {
    let mut out = Vec::with_capacity(order);
    let mut t = hp.int(1);
    for i in 0..order {
        out.push(t.clone());
        t = hp.div(&hp.mul(&t, x), &hp.int(i as i64 + 1));
    }
    out
}

/// `p(s) (s + c)` for integer coefficients, lowest order first.
fn poly_mul_linear(p: &[BigInt], c: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); p.len() + 1];
    for (i, a) in p.iter().enumerate() {
        out[i] += a * BigInt::from(c);
        out[i + 1] += a;
    }
    out
}
