//! Certificate text: a `# target:` line followed by one `c | a | i | b` row per
//! summand `c·a·f_i·b`, with `1` for an empty word and `i` counted from 1.

use freesig_core::reconstruct::{Certificate, CertificateRow};
use freesig_core::{Coefficient, Polynomial, Word};

use crate::format::{format_poly, format_word};
use crate::parse::parse_at;

#[derive(Debug, thiserror::Error)]
pub enum CertificateError {
    #[error(transparent)]
    Parse(#[from] crate::parse::ParseError),
    #[error("line {line}: {msg}")]
    Invalid { line: usize, msg: String },
}

pub fn format_certificate(c: &Certificate, names: &[String]) -> String {
    let mut out = format!("# target: {}\n", format_poly(&c.target, names));
    for r in &c.rows {
        out.push_str(&format!(
            "{} | {} | {} | {}\n",
            r.coeff,
            format_word(&r.left, names),
            r.index + 1,
            format_word(&r.right, names)
        ));
    }
    out
}

fn word_at(text: &str, names: &[String], line: usize, col: usize) -> Result<Word, CertificateError> {
    let p = parse_at(text, names, line, col)?;
    match p.terms() {
        [(w, c)] if c.is_one() => Ok(w.clone()),
        _ => Err(CertificateError::Invalid { line, msg: format!("`{}` is not a word", text.trim()) }),
    }
}

fn coeff_at(text: &str, names: &[String], line: usize, col: usize) -> Result<Coefficient, CertificateError> {
    let p = parse_at(text, names, line, col)?;
    match p.terms() {
        [] => Ok(Coefficient::zero()),
        [(w, c)] if w.is_empty() => Ok(c.clone()),
        _ => Err(CertificateError::Invalid { line, msg: format!("`{}` is not a number", text.trim()) }),
    }
}

pub fn parse_certificate(text: &str, names: &[String]) -> Result<Certificate, CertificateError> {
    let mut target: Option<Polynomial> = None;
    let mut rows = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        if raw.trim().is_empty() {
            continue;
        }
        if let Some(rest) = raw.trim_start().strip_prefix('#') {
            if let Some(t) = rest.trim_start().strip_prefix("target:") {
                let col = raw.len() - t.len() + 1;
                target = Some(parse_at(t, names, line, col)?);
            }
            continue;
        }
        let fields: Vec<&str> = raw.split('|').collect();
        if fields.len() != 4 {
            return Err(CertificateError::Invalid { line, msg: "expected `c | a | i | b`".into() });
        }
        let mut col = 1;
        let mut cols = [0; 4];
        for (k, f) in fields.iter().enumerate() {
            cols[k] = col;
            col += f.chars().count() + 1;
        }
        let coeff = coeff_at(fields[0], names, line, cols[0])?;
        let left = word_at(fields[1], names, line, cols[1])?;
        let index: usize = fields[2].trim().parse().ok().filter(|&i| i >= 1).ok_or_else(|| {
            CertificateError::Invalid { line, msg: format!("bad generator index `{}`", fields[2].trim()) }
        })?;
        let right = word_at(fields[3], names, line, cols[3])?;
        rows.push(CertificateRow { coeff, left, index: index - 1, right });
    }
    let target = target.ok_or(CertificateError::Invalid { line: 0, msg: "missing `# target:` line".into() })?;
    Ok(Certificate { target, rows })
}
