use std::f64::consts::TAU;

use perzeta_core::gp::{fit_predict, sample_prior, Dataset, JitterLadder};
use perzeta_core::kernels::{KernelSpec, Points};
use proptest::prelude::*;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

fn zeta(nu: f64) -> KernelSpec {
    KernelSpec::PeriodicZeta { nu, period: 1.0 }
}

#[test]
fn noiseless_interpolation() {
    for nu in [0.5, 1.0, 2.5] {
        let data = Dataset::new(vec![0.0, 0.3, 0.7], vec![0.4, -1.2, 0.9], 0.0).unwrap();
        let post = fit_predict(zeta(nu), &data, &data.inputs, &JitterLadder::default()).unwrap();
        for (m, y) in post.mean.iter().zip(&data.targets) {
            assert!((m - y).abs() < 1e-6, "nu = {nu}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn posterior_variance_below_prior(
        xs in prop::collection::vec(0.0f64..1.0, 1..12),
        q in 0.0f64..1.0,
        nu in 0.3f64..4.0,
        noise in 0.0f64..0.1,
    ) {
        let ys: Vec<f64> = xs.iter().map(|x| (TAU * x).sin()).collect();
        let data = Dataset::new(xs, ys, noise).unwrap();
        let post = fit_predict(zeta(nu), &data, &vec![q].into(), &JitterLadder::default()).unwrap();
        prop_assert!(post.variance[0] <= 1.0 + 1e-9);
        prop_assert!(post.variance[0] >= 0.0);
    }

    #[test]
    fn translation_by_period(q in 0.0f64..1.0, nu in 0.5f64..3.0) {
        let data = Dataset::new(vec![0.1, 0.45, 0.8], vec![1.0, 0.2, -0.7], 0.01).unwrap();
        let queries = Points::Scalars(vec![q, q + 1.0, q - 2.0]);
        let post = fit_predict(zeta(nu), &data, &queries, &JitterLadder::default()).unwrap();
        for j in 1..3 {
            prop_assert!((post.mean[j] - post.mean[0]).abs() <= 1e-9);
            prop_assert!((post.variance[j] - post.variance[0]).abs() <= 1e-9);
        }
    }
}

#[test]
fn misspecified_noise_lowers_evidence() {
    for seed in [1u64, 2, 3] {
        let xs: Vec<f64> = (0..24).map(|i| i as f64 / 24.0).collect();
        let clean = sample_prior(1.0, 64, seed, &xs).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(seed + 100);
        let noise_sd = 0.05;
        let ys: Vec<f64> = clean
            .iter()
            .map(|c| c + noise_sd * rng.sample::<f64, _>(StandardNormal))
            .collect();
        let lml = |noise: f64| {
            let data = Dataset::new(xs.clone(), ys.clone(), noise).unwrap();
            fit_predict(
                zeta(1.0),
                &data,
                &vec![0.0].into(),
                &JitterLadder::default(),
            )
            .unwrap()
            .log_marginal_likelihood
        };
        let right = lml(noise_sd * noise_sd);
        assert!(lml(25.0) < right, "seed {seed}");
    }
}

#[test]
fn dense_smooth_grid_needs_jitter() {
    let xs: Vec<f64> = (0..80).map(|i| i as f64 / 80.0).collect();
    let ys = vec![0.0; 80];
    let data = Dataset::new(xs, ys, 0.0).unwrap();
    let post = fit_predict(
        zeta(8.0),
        &data,
        &vec![0.5].into(),
        &JitterLadder::default(),
    )
    .unwrap();
    assert!(post.jitter > 0.0);
}

#[test]
fn prior_covariance_by_monte_carlo() {
    let nu = 1.0;
    let n = 200;
    let lags = [0.0, 0.25, 0.5];
    let seeds = 10_000u64;
    let mut sums = [0.0; 3];
    let mut squares = [0.0; 3];
    for seed in 0..seeds {
        let v = sample_prior(nu, n, seed, &lags).unwrap();
        for k in 0..3 {
            let p = v[0] * v[k];
            sums[k] += p;
            squares[k] += p * p;
        }
    }
    for (k, &x) in lags.iter().enumerate() {
        let m = seeds as f64;
        let mean = sums[k] / m;
        let se = ((squares[k] / m - mean * mean) / m).sqrt();
        let want: f64 = (1..=n)
            .map(|j| (TAU * j as f64 * x).cos() / (j as f64).powi(3))
            .sum();
        assert!(
            (mean - want).abs() <= 3.0 * se,
            "x = {x}: {mean} vs {want} (se {se})"
        );
    }
}
