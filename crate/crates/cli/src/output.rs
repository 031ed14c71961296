//! CSV output with 17 significant digits.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

pub fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV sink: a file if a path is given, else stdout.
pub fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn row(out: &mut dyn Write, fields: &[String]) -> io::Result<()> {
    writeln!(out, "{}", fields.join(","))
}

/// Summary lines go to stdout unless stdout carries the CSV.
pub fn summary(csv_to_stdout: bool, line: &str) {
    if csv_to_stdout {
        eprintln!("{line}");
    } else {
        println!("{line}");
    }
}
