//! `perzeta`: evaluate periodic zeta kernels, tabulate them, check accuracy
//! against the reference oracle, check positive definiteness, and run a GP demo.

mod commands;
mod exit;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use exit::Failure;

#[derive(Debug, Parser)]
#[command(name = "perzeta", version, about = "Periodic zeta covariance kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate Re F(x, s) or the normalized kernel Z_nu(x).
    Eval(EvalArgs),
    /// Tabulate Z_nu on a grid of [0, 1] for several nu.
    Table(TableArgs),
    /// Compare the library with the oracle on the sweep grid.
    Accuracy(AccuracyArgs),
    /// Minimum Gram eigenvalue over random point sets.
    PsdCheck(PsdArgs),
    /// Fit a GP to a synthetic periodic signal.
    GpDemo(GpDemoArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true))]
pub struct EvalArgs {
    /// Evaluate Re F(x, s).
    #[arg(long, group = "mode", requires = "s")]
    raw: bool,
    /// Evaluate Z_nu(x / period).
    #[arg(long, group = "mode", requires = "nu")]
    kernel: bool,
    #[arg(long, conflicts_with = "nu", allow_negative_numbers = true)]
    s: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, default_value_t = 1.0)]
    period: f64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Smoothness values, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [0.25, 0.5, 1.0, 2.0, 5.0])]
    nu: Vec<f64>,
    #[arg(long, default_value_t = 513)]
    grid_points: usize,
    /// CSV destination; stdout if omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AccuracyArgs {
    #[arg(long)]
    s_min: Option<f64>,
    #[arg(long)]
    s_max: Option<f64>,
    /// Largest acceptable error in ULP of the per-s grid maximum.
    #[arg(long, default_value_t = 128.0)]
    bound: f64,
    /// Oracle working precision in bits.
    #[arg(long, default_value_t = 128)]
    precision_bits: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelKind {
    Circle,
    Sphere,
    Matern,
    Derivative,
}

#[derive(Debug, Args)]
pub struct PsdArgs {
    #[arg(long, value_enum, default_value_t = KernelKind::Circle)]
    kernel: KernelKind,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    nu: f64,
    /// Constant-term weight of the sphere kernel.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, default_value_t = 1.0)]
    period: f64,
    #[arg(long, default_value_t = 1.0)]
    lengthscale: f64,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 64)]
    max_size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
pub struct GpDemoArgs {
    #[arg(long, default_value_t = 1.0)]
    nu: f64,
    /// Observation noise variance.
    #[arg(long, default_value_t = 0.01)]
    noise: f64,
    #[arg(long, default_value_t = 24)]
    n_points: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of query points, spread evenly over [0, x-max].
    #[arg(long, default_value_t = 201)]
    query_points: usize,
    #[arg(long, default_value_t = 1.0)]
    x_max: f64,
    /// Fourier terms in the synthetic signal.
    #[arg(long, default_value_t = 256)]
    truncation: usize,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also write the training data as CSV.
    #[arg(long)]
    train_output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::DOMAIN
            } else {
                exit::OK
            });
        }
    };
    let result = match cli.command {
        Command::Eval(a) => commands::eval::run(&a),
        Command::Table(a) => commands::table::run(&a),
        Command::Accuracy(a) => commands::accuracy::run(&a),
        Command::PsdCheck(a) => commands::psd::run(&a),
        Command::GpDemo(a) => commands::gp_demo::run(&a),
    };
    match result {
        Ok(()) => ExitCode::from(exit::OK),
        Err(Failure { code, message }) => {
            if code != exit::OK {
                eprintln!("perzeta: {message}");
            }
            ExitCode::from(code)
        }
    }
}
