//! Problem files.
//!
//! ```text
//! # comment
//! vars x y z
//! gen x*y*x - x*y
//! gen y*x*y
//! order deglex
//! module-order top
//! maxdeg 10
//! ```

use std::path::Path;

use freesig_core::Polynomial;

use crate::parse::{parse_at, ParseError};

#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    /// Variable names in ascending precedence.
    pub vars: Vec<String>,
    pub gens: Vec<Polynomial>,
    pub max_degree: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum ProblemError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("line {line}: {msg}")]
    Invalid { line: usize, msg: String },
    #[error("{err}")]
    Io { path: String, err: std::io::Error },
}

fn invalid(line: usize, msg: impl Into<String>) -> ProblemError {
    ProblemError::Invalid { line, msg: msg.into() }
}

impl Problem {
    pub fn parse(text: &str) -> Result<Problem, ProblemError> {
        let mut vars: Option<Vec<String>> = None;
        let mut gens = Vec::new();
        let mut max_degree = None;
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let body = raw.split('#').next().unwrap_or("");
            let trimmed = body.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let indent = body.len() - trimmed.len();
            let (key, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
            let rest_col = indent + key.len() + 2;
            match key {
                "vars" => {
                    if vars.is_some() {
                        return Err(invalid(line, "variables declared twice"));
                    }
                    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    if names.is_empty() {
                        return Err(invalid(line, "no variables"));
                    }
                    for (i, v) in names.iter().enumerate() {
                        let ok = v.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                            && v.chars().all(|c| c.is_alphanumeric() || c == '_');
                        if !ok {
                            return Err(invalid(line, format!("bad variable name `{v}`")));
                        }
                        if names[..i].contains(v) {
                            return Err(invalid(line, format!("variable `{v}` declared twice")));
                        }
                        if v.starts_with("e_") {
                            return Err(invalid(line, format!("variable `{v}` clashes with module basis names")));
                        }
                    }
                    vars = Some(names);
                }
                "gen" => {
                    let names = vars.as_ref().ok_or_else(|| invalid(line, "`gen` before `vars`"))?;
                    let p = parse_at(rest, names, line, rest_col)?;
                    if p.is_zero() {
                        return Err(invalid(line, "generator is zero"));
                    }
                    gens.push(p);
                }
                "order" => {
                    if rest.trim() != "deglex" {
                        return Err(invalid(line, format!("unsupported monomial order `{}`", rest.trim())));
                    }
                }
                "module-order" => {
                    if rest.trim() != "top" {
                        return Err(invalid(line, format!("unsupported module order `{}`", rest.trim())));
                    }
                }
                "maxdeg" => {
                    let d: usize = rest.trim().parse().map_err(|_| invalid(line, "maxdeg needs a positive integer"))?;
                    if d == 0 {
                        return Err(invalid(line, "maxdeg needs a positive integer"));
                    }
                    max_degree = Some(d);
                }
                other => return Err(invalid(line, format!("unknown keyword `{other}`"))),
            }
        }
        let vars = vars.ok_or_else(|| invalid(0, "missing `vars` line"))?;
        if gens.is_empty() {
            return Err(invalid(0, "no generators"));
        }
        Ok(Problem { vars, gens, max_degree })
    }

    pub fn load(path: &Path) -> Result<Problem, ProblemError> {
        let text =
            std::fs::read_to_string(path).map_err(|err| ProblemError::Io { path: path.display().to_string(), err })?;
        Problem::parse(&text)
    }
}
