use perzeta_oracle::{sweep_accuracy, OracleConfig, SweepGrid};

use crate::exit::{Failure, BOUND_EXCEEDED};
use crate::output::{fmt, row, sink, summary};
use crate::AccuracyArgs;

pub fn run(args: &AccuracyArgs) -> Result<(), Failure> {
    let cfg = OracleConfig {
        working_precision_bits: args.precision_bits,
        ..OracleConfig::default()
    };
    cfg.validate()?;
    let grid = SweepGrid::standard().restricted(
        args.s_min.unwrap_or(f64::NEG_INFINITY),
        args.s_max.unwrap_or(f64::INFINITY),
    );
    let report = sweep_accuracy(&grid, cfg)?;

    let mut out = sink(args.output.as_deref())?;
    row(
        &mut out,
        &["x", "s", "oracle", "computed", "err_ulp", "terms", "branch"].map(String::from),
    )?;
    for p in &report.points {
        row(
            &mut out,
            &[
                fmt(p.x),
                fmt(p.s),
                fmt(p.oracle),
                fmt(p.computed),
                fmt(p.err_ulp),
                p.terms.to_string(),
                format!("{:?}", p.branch).to_lowercase(),
            ],
        )?;
    }
    out.flush()?;
    drop(out);

    let to_stdout = args.output.is_none();
    summary(to_stdout, &format!("max_ulp={}", report.max_ulp));
    summary(to_stdout, &format!("max_terms={}", report.max_terms));
    if report.max_ulp <= args.bound {
        Ok(())
    } else {
        Err(Failure::new(
            BOUND_EXCEEDED,
            format!("max_ulp {} exceeds bound {}", report.max_ulp, args.bound),
        ))
    }
}
