//! Benchmark suites: every problem run by SigGB, vanilla Buchberger and
//! Buchberger with the chain criterion.
//!
//! A suite file has one problem per line, `name file [maxdeg]`, with `file`
//! relative to the suite file and `#` starting a comment.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use freesig_core::baseline::{buchberger_with, BuchbergerOptions};
use freesig_core::engine::{run, EngineOptions, SigResult};
use serde::{Deserialize, Serialize};

use crate::commands::deadline;
use crate::problem::Problem;
use crate::stats::Stats;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteEntry {
    pub name: String,
    pub path: PathBuf,
    pub max_degree: Option<usize>,
}

pub fn parse_suite(text: &str, base: &Path) -> Result<Vec<SuiteEntry>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let f: Vec<&str> = body.split_whitespace().collect();
        let max_degree = match f.as_slice() {
            [_, _] => None,
            [_, _, d] => Some(d.parse().with_context(|| format!("suite line {}: bad degree `{d}`", n + 1))?),
            _ => bail!("suite line {}: expected `name file [maxdeg]`", n + 1),
        };
        out.push(SuiteEntry { name: f[0].into(), path: base.join(f[1]), max_degree });
    }
    Ok(out)
}

pub fn load_suite(path: &Path) -> Result<Vec<SuiteEntry>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_suite(&text, path.parent().unwrap_or(Path::new(".")))
}

pub const ALGORITHMS: [&str; 3] = ["siggb", "vanilla", "optimized"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub problem: String,
    pub stats: Stats,
    pub timed_out: bool,
}

/// Runs one problem with one algorithm. A timeout ends the run early and is
/// recorded on the cell.
pub fn run_cell(
    name: &str,
    p: &Problem,
    max_degree: Option<usize>,
    algorithm: &str,
    timeout: Option<Duration>,
) -> Result<Cell> {
    let max_degree = max_degree.or(p.max_degree);
    let start = Instant::now();
    let mut stop = deadline(timeout);
    let (stats, timed_out) = match algorithm {
        "siggb" => {
            let opts = EngineOptions { max_degree, ..EngineOptions::default() };
            let r: SigResult = run(&p.gens, &opts, &mut stop)?;
            let s = Stats::from_engine(algorithm, &r, &p.vars, start.elapsed());
            (s, matches!(r.status, freesig_core::engine::Status::Interrupted { .. }))
        }
        "vanilla" | "optimized" => {
            let opts =
                BuchbergerOptions { max_degree, chain_criterion: algorithm == "optimized", ..Default::default() };
            let r = buchberger_with(&p.gens, &opts, &mut stop)?;
            let s = Stats::from_baseline(algorithm, &r, start.elapsed());
            (s, matches!(r.status, freesig_core::baseline::BaselineStatus::Interrupted { .. }))
        }
        other => bail!("unknown algorithm `{other}`"),
    };
    Ok(Cell { problem: name.into(), stats, timed_out })
}

/// All cells of a suite, problem by problem, in the order of [`ALGORITHMS`].
pub fn run_suite(entries: &[SuiteEntry], timeout: Option<Duration>) -> Result<Vec<Cell>> {
    let mut cells = Vec::new();
    for e in entries {
        let p = Problem::load(&e.path).with_context(|| e.path.display().to_string())?;
        for alg in ALGORITHMS {
            cells.push(run_cell(&e.name, &p, e.max_degree, alg, timeout)?);
        }
    }
    Ok(cells)
}

pub fn format_table(cells: &[Cell]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:<12} {:<10} {:>8} {:>10} {:>7} {:>11}  status",
        "problem", "algorithm", "S-polys", "red. to 0", "basis", "time (ms)"
    )
    .unwrap();
    for c in cells {
        let s = &c.stats;
        let status = if c.timed_out { format!("timeout ({})", s.status) } else { s.status.clone() };
        writeln!(
            out,
            "{:<12} {:<10} {:>8} {:>10} {:>7} {:>11.1}  {}",
            c.problem, s.algorithm, s.spolys, s.zero_reductions, s.basis_size, s.wall_time_ms, status
        )
        .unwrap();
    }
    out
}
