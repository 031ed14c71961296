//! Regenerates `crates/core/data/coefficients.txt`.
//!
//! ```text
//! cargo run -p perzeta-oracle --bin gen-tables [-- OUTPUT]
//! ```
//!
//! Without an argument the table is written to standard output.

use std::process::ExitCode;

use perzeta_oracle::{generate_coefficient_tables, OracleConfig};

fn main() -> ExitCode {
    let output = std::env::args_os().nth(1);
    let text = match generate_coefficient_tables(OracleConfig::default()).and_then(|t| t.render()) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("gen-tables: {e}");
            return ExitCode::from(5);
        }
    };
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("gen-tables: {}: {e}", path.to_string_lossy());
                return ExitCode::from(4);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
