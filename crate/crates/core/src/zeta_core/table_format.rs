//! Plain-text format of the generated coefficient tables.
//!
//! ```text
//! # free-form header lines (generator configuration)
//! [zeta_tilde]
//! 5.000000000000000000000000000000000e-1
//! ...
//! [log_gamma 0]
//! -5.772156649015328606065120900824024e-1
//! ...
//! ```
//!
//! `[zeta_tilde]` holds the Taylor coefficients about 0 of the pole-free zeta
//! `ζ(s) - 1/(s-1)`, lowest order first. Each `[log_gamma q]` section holds the
//! Taylor coefficients `ψ_{k-1}(1+q)/k!`, k = 1, 2, ..., of
//! `log Γ(1+q+u) - log Γ(1+q)` in powers of `u`.
//!
//! This file is also compiled into the build script, so it must not depend on
//! anything outside `std`.

/// Parsed contents of a coefficient table file.
#[derive(Debug, Clone, PartialEq)]
pub struct TableText {
    pub header: Vec<String>,
    pub zeta_tilde: Vec<f64>,
    pub log_gamma: Vec<(u32, Vec<f64>)>,
}

enum Section {
    None,
    ZetaTilde,
    LogGamma(usize),
}

pub fn parse(text: &str) -> Result<TableText, String> {
    let mut header = Vec::new();
    let mut zeta_tilde = Vec::new();
    let mut log_gamma: Vec<(u32, Vec<f64>)> = Vec::new();
    let mut section = Section::None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            header.push(comment.trim().to_string());
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            let mut parts = name.split_whitespace();
            section = match (parts.next(), parts.next(), parts.next()) {
                (Some("zeta_tilde"), None, None) => Section::ZetaTilde,
                (Some("log_gamma"), Some(q), None) => {
                    let q: u32 = q
                        .parse()
                        .map_err(|_| format!("line {}: bad shift {q:?}", lineno + 1))?;
                    if log_gamma.iter().any(|(existing, _)| *existing == q) {
                        return Err(format!("line {}: duplicate section q={q}", lineno + 1));
                    }
                    log_gamma.push((q, Vec::new()));
                    Section::LogGamma(log_gamma.len() - 1)
                }
                _ => return Err(format!("line {}: unknown section [{name}]", lineno + 1)),
            };
            continue;
        }
        let value: f64 = line
            .parse()
            .map_err(|_| format!("line {}: bad literal {line:?}", lineno + 1))?;
        if !value.is_finite() {
            return Err(format!("line {}: non-finite literal", lineno + 1));
        }
        match section {
            Section::None => return Err(format!("line {}: value outside a section", lineno + 1)),
            Section::ZetaTilde => zeta_tilde.push(value),
            Section::LogGamma(i) => log_gamma[i].1.push(value),
        }
    }

    if zeta_tilde.is_empty() {
        return Err("missing [zeta_tilde] section".into());
    }
    if !log_gamma.iter().any(|(q, _)| *q == 0) {
        return Err("missing [log_gamma 0] section".into());
    }
    if let Some((q, _)) = log_gamma.iter().find(|(_, c)| c.is_empty()) {
        return Err(format!("empty [log_gamma {q}] section"));
    }
    Ok(TableText {
        header,
        zeta_tilde,
        log_gamma,
    })
}
