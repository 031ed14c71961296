use perzeta_core::gp::{fit_predict, sample_prior, Dataset, JitterLadder};
use perzeta_core::kernels::{KernelSpec, Points};
use perzeta_core::riemann_zeta;
use perzeta_core::Error;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::exit::{Failure, CONDITIONING, DOMAIN};
use crate::output::{fmt, row, sink, summary};
use crate::GpDemoArgs;

/// Training inputs sit on the regular grid `i / n_points`; targets are one
/// prior draw scaled to unit variance plus Gaussian noise.
pub fn run(args: &GpDemoArgs) -> Result<(), Failure> {
    if args.n_points < 2 || args.query_points < 2 {
        return Err(Failure::new(
            DOMAIN,
            "need n-points >= 2 and query-points >= 2",
        ));
    }
    if !(args.noise.is_finite() && args.noise >= 0.0) {
        return Err(Failure::new(
            DOMAIN,
            format!("noise must be >= 0, got {}", args.noise),
        ));
    }
    if !(args.x_max.is_finite() && args.x_max > 0.0) {
        return Err(Failure::new(DOMAIN, "x-max must be positive"));
    }
    let spec = KernelSpec::PeriodicZeta {
        nu: args.nu,
        period: 1.0,
    };
    spec.validate()?;

    let xs: Vec<f64> = (0..args.n_points)
        .map(|i| i as f64 / args.n_points as f64)
        .collect();
    let draw = sample_prior(args.nu, args.truncation, args.seed, &xs)?;
    let scale = riemann_zeta(1.0 + 2.0 * args.nu)?.sqrt();
    let mut rng = ChaCha20Rng::seed_from_u64(args.seed.wrapping_add(1));
    let noise_sd = args.noise.sqrt();
    let ys: Vec<f64> = draw
        .iter()
        .map(|f| f / scale + noise_sd * rng.sample::<f64, _>(StandardNormal))
        .collect();

    let queries: Vec<f64> = (0..args.query_points)
        .map(|k| args.x_max * k as f64 / (args.query_points - 1) as f64)
        .collect();
    let data = Dataset::new(xs.clone(), ys.clone(), args.noise)?;
    let post = match fit_predict(
        spec,
        &data,
        &Points::Scalars(queries.clone()),
        &JitterLadder::default(),
    ) {
        Err(Error::Conditioning { ladder }) => {
            return Err(Failure::new(
                CONDITIONING,
                format!("Gram matrix not factorizable; tried jitter ladder {ladder:?}"),
            ))
        }
        other => other?,
    };

    if let Some(path) = &args.train_output {
        let mut out = sink(Some(path))?;
        row(&mut out, &["x", "y"].map(String::from))?;
        for (x, y) in xs.iter().zip(&ys) {
            row(&mut out, &[fmt(*x), fmt(*y)])?;
        }
        out.flush()?;
    }

    let mut out = sink(args.output.as_deref())?;
    row(
        &mut out,
        &["x", "mean", "lower", "upper", "variance"].map(String::from),
    )?;
    for (i, x) in queries.iter().enumerate() {
        let (m, v) = (post.mean[i], post.variance[i]);
        let band = 2.0 * v.sqrt();
        row(
            &mut out,
            &[fmt(*x), fmt(m), fmt(m - band), fmt(m + band), fmt(v)],
        )?;
    }
    out.flush()?;
    drop(out);

    let to_stdout = args.output.is_none();
    summary(
        to_stdout,
        &format!(
            "log_marginal_likelihood={:.16e}",
            post.log_marginal_likelihood
        ),
    );
    summary(to_stdout, &format!("jitter={:e}", post.jitter));
    Ok(())
}
