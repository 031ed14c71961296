use perzeta_core::kernels::{gram, KernelSpec, Points};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::exit::{Failure, BOUND_EXCEEDED, DOMAIN};
use crate::{KernelKind, PsdArgs};

const TOLERANCE: f64 = -1e-9;

pub fn run(args: &PsdArgs) -> Result<(), Failure> {
    let spec = match args.kernel {
        KernelKind::Circle => KernelSpec::PeriodicZeta {
            nu: args.nu,
            period: args.period,
        },
        KernelKind::Derivative => KernelSpec::PeriodicZetaDerivative {
            nu: args.nu,
            period: args.period,
        },
        KernelKind::Matern => KernelSpec::Matern {
            nu: args.nu,
            lengthscale: args.lengthscale,
        },
        KernelKind::Sphere => KernelSpec::SphereZeta {
            nu: args.nu,
            a: args.a,
        },
    };
    spec.validate()?;
    if args.trials == 0 || args.max_size < 2 {
        return Err(Failure::new(DOMAIN, "need trials >= 1 and max-size >= 2"));
    }

    let mut rng = ChaCha20Rng::seed_from_u64(args.seed);
    let mut worst = f64::INFINITY;
    for _ in 0..args.trials {
        let n = rng.random_range(2..=args.max_size);
        let points = if spec.is_sphere() {
            Points::Unit4(
                (0..n)
                    .map(|_| std::array::from_fn(|_| rng.sample(StandardNormal)))
                    .collect(),
            )
        } else {
            let span = match spec {
                KernelSpec::Matern { lengthscale, .. } => 4.0 * lengthscale,
                _ => args.period,
            };
            Points::Scalars((0..n).map(|_| span * rng.random::<f64>()).collect())
        };
        worst = worst.min(gram(spec, &points)?.min_eigenvalue());
    }
    println!("trials={} min_eigenvalue={:.16e}", args.trials, worst);
    if worst >= TOLERANCE {
        Ok(())
    } else {
        Err(Failure::new(
            BOUND_EXCEEDED,
            format!("minimum eigenvalue {worst:e} below {TOLERANCE:e}"),
        ))
    }
}
