//! Periodic zeta covariance functions for Gaussian-process regression.
//!
//! The crate evaluates the real part of the periodic zeta function
//!
//! ```text
//! Re F(x, s) = Σ_{n ≥ 1} cos(2πnx) / n^s
//! ```
//!
//! to near machine precision for every `x` and every `s > 0` (with `x mod 1 != 0`
//! when `s <= 1`), and builds on it the normalized covariance
//! `Z_ν(x) = Re F(x, 1 + 2ν) / ζ(1 + 2ν)`, the covariance of the derivative
//! process, a Matérn comparator and a variant that is positive definite on the
//! 3-sphere.
//!
//! * [`zeta_core`]: the evaluation algorithm (direct summation for large `s`,
//!   Hurwitz-zeta expansion with pole cancellation for small `s`).
//! * [`kernels`]: covariance functions and Gram-matrix assembly.
//! * [`gp`]: minimal GP regression and prior sampling.

pub mod error;
pub mod gp;
pub mod kernels;
pub mod zeta_core;

pub use error::{Error, Result};

pub use kernels::{gram, Kernel, KernelSpec, Points};
pub use zeta_core::{
    periodic_zeta_real, riemann_zeta, CoefficientTables, PeriodicZeta, SeriesBudget,
};
