use perzeta_core::kernels::z_nu;
use perzeta_core::zeta_core::PeriodicZeta;

use crate::exit::Failure;
use crate::output::fmt;
use crate::EvalArgs;

pub fn run(args: &EvalArgs) -> Result<(), Failure> {
    let value = if args.raw {
        let s = args.s.expect("clap requires --s with --raw");
        let period = args.period;
        if !(period.is_finite() && period > 0.0) {
            return Err(Failure::new(
                crate::exit::DOMAIN,
                format!("period must be positive, got {period}"),
            ));
        }
        PeriodicZeta::with_defaults(s)?.eval(args.x / period)?
    } else {
        let nu = args.nu.expect("clap requires --nu with --kernel");
        z_nu(args.x, nu, args.period)?
    };
    println!("{}", fmt(value));
    Ok(())
}
