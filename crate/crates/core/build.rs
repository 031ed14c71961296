use std::env;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

#[path = "src/zeta_core/table_format.rs"]
#[allow(dead_code)]
mod table_format;

fn main() {
    let manifest = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    let source = manifest.join("data").join("coefficients.txt");
    println!("cargo:rerun-if-changed={}", source.display());
    println!("cargo:rerun-if-changed=src/zeta_core/table_format.rs");

    let text = fs::read_to_string(&source)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", source.display()));
    let tables = table_format::parse(&text)
        .unwrap_or_else(|e| panic!("malformed {}: {e}", source.display()));

    let mut out = String::new();
    writeln!(out, "// Generated from data/coefficients.txt by build.rs.").unwrap();
    write_slice(&mut out, "ZETA_TILDE", &tables.zeta_tilde);
    writeln!(out, "pub(crate) const LOG_GAMMA: &[(u32, &[f64])] = &[").unwrap();
    for (q, coeffs) in &tables.log_gamma {
        write!(out, "    ({q}, &[").unwrap();
        for c in coeffs {
            write!(out, "{c:?}, ").unwrap();
        }
        writeln!(out, "]),").unwrap();
    }
    writeln!(out, "];").unwrap();

    let dest = PathBuf::from(env::var("OUT_DIR").unwrap()).join("coefficients.rs");
    fs::write(dest, out).unwrap();
}

fn write_slice(out: &mut String, name: &str, values: &[f64]) {
    writeln!(out, "pub(crate) const {name}: &[f64] = &[").unwrap();
    for v in values {
        writeln!(out, "    {v:?},").unwrap();
    }
    writeln!(out, "];").unwrap();
}
