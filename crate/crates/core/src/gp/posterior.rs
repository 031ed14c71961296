use nalgebra::{Cholesky, DMatrix, DVector};

use crate::error::{check_finite, domain, Error, Result};
use crate::kernels::{Kernel, KernelSpec, Points};

/// Training data for [`fit_predict`].
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub inputs: Points,
    pub targets: Vec<f64>,
    pub noise_variance: f64,
}

impl Dataset {
    pub fn new(inputs: impl Into<Points>, targets: Vec<f64>, noise_variance: f64) -> Result<Self> {
        let inputs = inputs.into();
        if inputs.len() != targets.len() {
            return domain(format!(
                "{} inputs but {} targets",
                inputs.len(),
                targets.len()
            ));
        }
        check_finite("noise_variance", noise_variance)?;
        if noise_variance < 0.0 {
            return domain(format!("noise variance must be >= 0, got {noise_variance}"));
        }
        for &y in &targets {
            check_finite("target", y)?;
        }
        Ok(Dataset {
            inputs,
            targets,
            noise_variance,
        })
    }
}

/// Relative diagonal inflations tried in order until the Cholesky
/// factorization succeeds; each rung adds `j · max diagonal`.
#[derive(Debug, Clone, PartialEq)]
pub struct JitterLadder(pub Vec<f64>);

impl Default for JitterLadder {
    fn default() -> Self {
        JitterLadder(vec![0.0, 1e-12, 1e-10, 1e-8, 1e-6])
    }
}

/// Posterior at the query points.
#[derive(Debug, Clone, PartialEq)]
pub struct PosteriorResult {
    pub mean: Vec<f64>,
    /// Clamped at 0 from below.
    pub variance: Vec<f64>,
    pub log_marginal_likelihood: f64,
    /// The ladder rung that succeeded (relative to the max diagonal).
    pub jitter: f64,
}

/// GP posterior mean, variance and log marginal likelihood.
pub fn fit_predict(
    spec: KernelSpec,
    data: &Dataset,
    queries: &Points,
    ladder: &JitterLadder,
) -> Result<PosteriorResult> {
    let kernel = Kernel::new(spec)?;
    let n = data.targets.len();
    let mut k = kernel.gram(&data.inputs)?;
    for i in 0..n {
        k[(i, i)] += data.noise_variance;
    }
    let (chol, jitter) = factorize(&k, ladder)?;

    let y = DVector::from_column_slice(&data.targets);
    let alpha = chol.solve(&y);
    let cross = kernel.cross(&data.inputs, queries)?;
    let mean = cross.transpose() * &alpha;
    let v = chol.l().solve_lower_triangular(&cross).unwrap_or(cross);
    let prior = kernel.variance();
    let variance = (0..queries.len())
        .map(|j| (prior - v.column(j).norm_squared()).max(0.0))
        .collect();

    let log_det: f64 = chol.l().diagonal().iter().map(|d| d.ln()).sum::<f64>() * 2.0;
    let lml =
        -0.5 * y.dot(&alpha) - 0.5 * log_det - 0.5 * n as f64 * (2.0 * std::f64::consts::PI).ln();
    Ok(PosteriorResult {
        mean: mean.iter().copied().collect(),
        variance,
        log_marginal_likelihood: lml,
        jitter,
    })
}

fn factorize(
    k: &DMatrix<f64>,
    ladder: &JitterLadder,
) -> Result<(Cholesky<f64, nalgebra::Dyn>, f64)> {
    let max_diag = k.diagonal().iter().copied().fold(0.0, f64::max);
    for &j in &ladder.0 {
        let mut m = k.clone();
        for i in 0..m.nrows() {
            m[(i, i)] += j * max_diag;
        }
        if let Some(chol) = Cholesky::new(m) {
            return Ok((chol, j));
        }
    }
    Err(Error::Conditioning {
        ladder: ladder.0.clone(),
    })
}
