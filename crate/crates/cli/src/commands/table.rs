use perzeta_core::kernels::{Kernel, KernelSpec};

use crate::exit::{Failure, DOMAIN};
use crate::output::{fmt, row, sink};
use crate::TableArgs;

pub fn run(args: &TableArgs) -> Result<(), Failure> {
    if args.grid_points < 2 {
        return Err(Failure::new(DOMAIN, "grid-points must be at least 2"));
    }
    if args.nu.is_empty() {
        return Err(Failure::new(DOMAIN, "at least one nu is required"));
    }
    let kernels = args
        .nu
        .iter()
        .map(|&nu| Kernel::new(KernelSpec::PeriodicZeta { nu, period: 1.0 }))
        .collect::<Result<Vec<_>, _>>()?;

    let n = args.grid_points;
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let x = k as f64 / (n - 1) as f64;
        let mut fields = vec![fmt(x)];
        for kernel in &kernels {
            fields.push(fmt(kernel.eval(x)?));
        }
        rows.push(fields);
    }

    let mut out = sink(args.output.as_deref())?;
    let mut header = vec!["x".to_string()];
    header.extend(args.nu.iter().map(|nu| format!("z_nu_{nu}")));
    row(&mut out, &header)?;
    for fields in &rows {
        row(&mut out, fields)?;
    }
    out.flush()?;
    Ok(())
}
