//! Gaussian-process regression and prior sampling with the kernels of
//! [`crate::kernels`].

mod posterior;
mod prior;

pub use posterior::{fit_predict, Dataset, JitterLadder, PosteriorResult};
pub use prior::{sample_prior, FourierSample};
