use astro_float::BigFloat as Big;
use perzeta_core::zeta_core::{Branch, PeriodicZeta};

use crate::periodic::rationalize;
use crate::{to_f64, Hp, Oracle, OracleConfig, OracleError};

/// Points at which the library is compared with the oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub xs: Vec<f64>,
    pub ss: Vec<f64>,
}

impl SweepGrid {
    /// `x = k/256` for `k = 1..=128`, and `s` covering the Hurwitz branch on a
    /// regular mesh, offsets `m ± 2^-k` around every integer `2..=9`, and a few
    /// points on the direct branch.
    pub fn standard() -> Self {
        let xs = (1..=128).map(|k| k as f64 / 256.0).collect();
        let mut ss = vec![1.0 + 2f64.powi(-10)];
        ss.extend((5..=39).map(|k| k as f64 * 0.25));
        for m in 2..=9 {
            for k in [4, 12, 20, 30, 44] {
                let d = 2f64.powi(-k);
                ss.push(m as f64 - d);
                ss.push(m as f64 + d);
            }
        }
        ss.extend([10.0, 10.5, 12.0, 15.0, 20.0]);
        ss.sort_by(f64::total_cmp);
        ss.dedup();
        SweepGrid { xs, ss }
    }

    /// Keeps only `s` in `[s_min, s_max]`.
    pub fn restricted(mut self, s_min: f64, s_max: f64) -> Self {
        self.ss.retain(|s| *s >= s_min && *s <= s_max);
        self
    }

    pub fn len(&self) -> usize {
        self.xs.len() * self.ss.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One compared point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracyPoint {
    pub x: f64,
    pub s: f64,
    /// Oracle value rounded to double.
    pub oracle: f64,
    pub computed: f64,
    pub err_ulp: f64,
    pub terms: usize,
    pub branch: Branch,
}

/// Outcome of [`sweep_accuracy`].
#[derive(Debug, Clone, PartialEq)]
pub struct AccuracyReport {
    pub points: Vec<AccuracyPoint>,
    pub max_ulp: f64,
    /// Per-`s` maximum of `|oracle|` over the x grid: the ULP reference.
    pub metric_max_abs: Vec<(f64, f64)>,
    /// Most series terms used at any point.
    pub max_terms: usize,
}

impl AccuracyReport {
    pub fn grid(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.points.iter().map(|p| (p.x, p.s))
    }

    pub fn errors_ulp(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.err_ulp)
    }

    /// The point with the largest error.
    pub fn worst(&self) -> Option<&AccuracyPoint> {
        self.points
            .iter()
            .max_by(|a, b| a.err_ulp.total_cmp(&b.err_ulp))
    }
}

/// `|computed - reference| / ulp(max_abs)`, with the difference taken at high precision.
pub fn ulp_error(hp: &Hp, computed: f64, reference: &Big, max_abs: f64) -> f64 {
    let diff = hp.sub(&hp.f64(computed), reference);
    let ulp = max_abs.next_up() - max_abs;
    to_f64(&diff).abs() / ulp
}

/// Compares `perzeta_core`'s `Re F(x, s)` (default budget and tables) with the
/// oracle over `grid`.
pub fn sweep_accuracy(grid: &SweepGrid, cfg: OracleConfig) -> Result<AccuracyReport, OracleError> {
    let mut oracle = Oracle::new(cfg)?;
    let rational: Vec<_> = grid
        .xs
        .iter()
        .map(|x| rationalize(*x))
        .collect::<Result<_, _>>()?;
    let mut points = Vec::with_capacity(grid.len());
    let mut metric_max_abs = Vec::with_capacity(grid.ss.len());
    for &s in &grid.ss {
        let references = reference_values(&mut oracle, grid, &rational, s)?;
        let max_abs = references
            .iter()
            .map(|v| to_f64(v).abs())
            .fold(0.0, f64::max);
        metric_max_abs.push((s, max_abs));
        let evaluator = PeriodicZeta::with_defaults(s)?;
        for (&x, reference) in grid.xs.iter().zip(&references) {
            let e = evaluator.eval_detailed(x)?;
            points.push(AccuracyPoint {
                x,
                s,
                oracle: to_f64(reference),
                computed: e.value,
                err_ulp: ulp_error(oracle.hp(), e.value, reference, max_abs),
                terms: e.terms,
                branch: e.branch,
            });
        }
    }
    let max_ulp = points.iter().map(|p| p.err_ulp).fold(0.0, f64::max);
    let max_terms = points.iter().map(|p| p.terms).max().unwrap_or(0);
    Ok(AccuracyReport {
        points,
        max_ulp,
        metric_max_abs,
        max_terms,
    })
}

fn reference_values(
    oracle: &mut Oracle,
    grid: &SweepGrid,
    rational: &[crate::periodic::RationalPoint],
    s: f64,
) -> Result<Vec<Big>, OracleError> {
    let mut out: Vec<Option<Big>> = vec![None; grid.xs.len()];
    // Exact rationals sharing a denominator are evaluated together.
    let mut denominators: Vec<usize> = rational
        .iter()
        .filter(|r| r.p != 0 && num_traits::Zero::is_zero(&r.offset))
        .map(|r| r.q)
        .collect();
    denominators.sort_unstable();
    denominators.dedup();
    for q in denominators {
        let members: Vec<usize> = (0..rational.len())
            .filter(|&i| {
                rational[i].q == q
                    && rational[i].p != 0
                    && num_traits::Zero::is_zero(&rational[i].offset)
            })
            .collect();
        let numerators: Vec<usize> = members.iter().map(|&i| rational[i].p).collect();
        let values = oracle.periodic_zeta_grid(s, q, &numerators)?;
        for (i, v) in members.into_iter().zip(values) {
            out[i] = Some(v);
        }
    }
    for (i, slot) in out.iter_mut().enumerate() {
        if slot.is_none() {
            *slot = Some(oracle.periodic_zeta_real(grid.xs[i], s)?);
        }
    }
    Ok(out.into_iter().map(|v| v.expect("filled")).collect())
}
