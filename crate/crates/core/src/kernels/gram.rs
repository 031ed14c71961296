use nalgebra::{DMatrix, SymmetricEigen};

use super::{Kernel, KernelSpec};
use crate::error::{Error, Result};

/// A single kernel input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point<'a> {
    Scalar(f64),
    /// Point of S³ as a vector of R⁴ (normalized before use).
    Unit4(&'a [f64; 4]),
}

/// A list of kernel inputs of one kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Points {
    /// Positions on the circle, or longitudes along one great circle for the
    /// sphere kernel.
    Scalars(Vec<f64>),
    Unit4(Vec<[f64; 4]>),
}

impl Points {
    pub fn len(&self) -> usize {
        match self {
            Points::Scalars(v) => v.len(),
            Points::Unit4(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> Point<'_> {
        match self {
            Points::Scalars(v) => Point::Scalar(v[i]),
            Points::Unit4(v) => Point::Unit4(&v[i]),
        }
    }
}

impl From<Vec<f64>> for Points {
    fn from(v: Vec<f64>) -> Self {
        Points::Scalars(v)
    }
}

impl From<Vec<[f64; 4]>> for Points {
    fn from(v: Vec<[f64; 4]>) -> Self {
        Points::Unit4(v)
    }
}

/// Pairwise kernel values of a point set.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub values: DMatrix<f64>,
    pub points: Points,
    pub spec: KernelSpec,
}

impl GramMatrix {
    /// Smallest eigenvalue after scaling to unit diagonal.
    pub fn min_eigenvalue(&self) -> f64 {
        let n = self.values.nrows();
        if n == 0 {
            return f64::INFINITY;
        }
        let inv: Vec<f64> = (0..n).map(|i| 1.0 / self.values[(i, i)].sqrt()).collect();
        let scaled = DMatrix::from_fn(n, n, |i, j| self.values[(i, j)] * inv[i] * inv[j]);
        SymmetricEigen::new(scaled)
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

/// Gram matrix of `spec` on `points`; each unordered pair is evaluated once.
pub fn gram(spec: KernelSpec, points: &Points) -> Result<GramMatrix> {
    let kernel = Kernel::new(spec)?;
    Ok(GramMatrix {
        values: kernel.gram(points)?,
        points: points.clone(),
        spec,
    })
}

impl Kernel {
    /// Symmetric matrix of pairwise values.
    pub fn gram(&self, points: &Points) -> Result<DMatrix<f64>> {
        self.check_kind(points)?;
        let n = points.len();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = self.between(points.get(i), points.get(j))?;
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        Ok(m)
    }

    /// `rows × cols` matrix of covariances between two point sets.
    pub fn cross(&self, rows: &Points, cols: &Points) -> Result<DMatrix<f64>> {
        self.check_kind(rows)?;
        self.check_kind(cols)?;
        let mut m = DMatrix::zeros(rows.len(), cols.len());
        for i in 0..rows.len() {
            for j in 0..cols.len() {
                m[(i, j)] = self.between(rows.get(i), cols.get(j))?;
            }
        }
        Ok(m)
    }

    fn check_kind(&self, points: &Points) -> Result<()> {
        if matches!(points, Points::Unit4(_)) && !self.spec().is_sphere() {
            return Err(Error::DimensionMismatch(format!(
                "{:?} takes scalar inputs, not 4-vectors",
                self.spec()
            )));
        }
        Ok(())
    }
}
