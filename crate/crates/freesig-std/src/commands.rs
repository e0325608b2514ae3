//! What each subcommand does, minus argument parsing and file output.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use freesig_core::baseline::{buchberger_with, reduced_gb, BuchbergerOptions};
use freesig_core::engine::{run, EngineOptions, EngineResult, LabelledResult, SigResult};
use freesig_core::reconstruct::{certify, enumerate_syzygy_basis, syzygy_recovery, SyzygyBasisDescription};
use freesig_core::signatures::Label;
use freesig_core::{ModuleElement, ModuleMonomial};

use crate::certificate::format_certificate;
use crate::format::{format_module_element, format_poly, format_sig};
use crate::parse::parse_polynomial;
use crate::problem::Problem;
use crate::stats::{engine_status, Stats};

/// Options shared by the engine commands.
#[derive(Debug, Clone, Default)]
pub struct RunFlags {
    pub max_degree: Option<usize>,
    pub no_syzygy_crit: bool,
    pub no_f5_crit: bool,
    pub no_singular_crit: bool,
    pub top_only: bool,
    pub pairs_budget: Option<usize>,
    pub timeout: Option<Duration>,
}

impl RunFlags {
    /// Flag value first, then the problem file.
    pub fn max_degree(&self, p: &Problem) -> Option<usize> {
        self.max_degree.or(p.max_degree)
    }

    pub fn engine_options(&self, p: &Problem) -> EngineOptions {
        EngineOptions {
            max_degree: self.max_degree(p),
            syzygy_criterion: !self.no_syzygy_crit,
            f5_criterion: !self.no_f5_crit,
            singular_criterion: !self.no_singular_crit,
            top_only: self.top_only,
            pairs_budget: self.pairs_budget,
            record_trace: false,
        }
    }
}

/// Interrupts once `timeout` has passed.
pub fn deadline(timeout: Option<Duration>) -> impl FnMut() -> bool {
    let end = timeout.map(|t| Instant::now() + t);
    move || end.is_some_and(|e| Instant::now() >= e)
}

pub struct Output {
    pub text: String,
    pub stats: Stats,
}

fn run_engine<L: Label>(
    p: &Problem,
    opts: &EngineOptions,
    timeout: Option<Duration>,
) -> Result<(EngineResult<L>, Duration)> {
    let start = Instant::now();
    let r = run(&p.gens, opts, &mut deadline(timeout))?;
    Ok((r, start.elapsed()))
}

fn header<L: Label>(out: &mut String, r: &EngineResult<L>, names: &[String]) {
    writeln!(out, "# status: {}", engine_status(&r.status, names)).unwrap();
    if r.heuristic_truncation {
        writeln!(out, "# note: degree truncation of inhomogeneous input is heuristic").unwrap();
    }
    writeln!(out, "# basis: {}", r.basis.len()).unwrap();
}

fn syzygy_lines(out: &mut String, sigs: &[ModuleMonomial], names: &[String]) {
    writeln!(out, "# syzygy signatures: {}", sigs.len()).unwrap();
    for s in sigs {
        writeln!(out, "{}", format_sig(s, names)).unwrap();
    }
}

/// `compute`: signature basis, one `poly @ signature` line per element.
pub fn compute(p: &Problem, flags: &RunFlags) -> Result<Output> {
    let (r, wall): (SigResult, _) = run_engine(p, &flags.engine_options(p), flags.timeout)?;
    let names = &p.vars;
    let mut text = String::new();
    header(&mut text, &r, names);
    for g in &r.basis {
        writeln!(text, "{} @ {}", format_poly(&g.poly, names), format_sig(g.sig(), names)).unwrap();
    }
    syzygy_lines(&mut text, &r.syzygy_signatures(), names);
    Ok(Output { text, stats: Stats::from_engine("siggb", &r, names, wall) })
}

/// `labelled`: labelled basis, one `poly @ label` line per element.
pub fn labelled(p: &Problem, flags: &RunFlags) -> Result<Output> {
    let (r, wall): (LabelledResult, _) = run_engine(p, &flags.engine_options(p), flags.timeout)?;
    let names = &p.vars;
    let mut text = String::new();
    header(&mut text, &r, names);
    for g in &r.basis {
        writeln!(text, "{} @ {}", format_poly(&g.poly, names), format_module_element(&g.label, names)).unwrap();
    }
    writeln!(text, "# syzygies: {}", r.syzygies.len()).unwrap();
    for s in &r.syzygies {
        writeln!(text, "{}", format_module_element(s, names)).unwrap();
    }
    Ok(Output { text, stats: Stats::from_engine("labelled", &r, names, wall) })
}

/// `buchberger`: the reduced basis, one polynomial per line.
pub fn buchberger(p: &Problem, flags: &RunFlags, chain: bool, interreduce: bool) -> Result<Output> {
    let opts = BuchbergerOptions {
        max_degree: flags.max_degree(p),
        chain_criterion: chain,
        interreduce,
        pairs_budget: flags.pairs_budget,
    };
    let start = Instant::now();
    let r = buchberger_with(&p.gens, &opts, &mut deadline(flags.timeout))?;
    let wall = start.elapsed();
    let reduced = reduced_gb(&r.basis);
    let mut text = String::new();
    let stats = Stats::from_baseline(if chain { "buchberger-chain" } else { "buchberger" }, &r, wall);
    writeln!(text, "# status: {}", stats.status).unwrap();
    writeln!(text, "# reduced basis: {}", reduced.len()).unwrap();
    for g in &reduced {
        writeln!(text, "{}", format_poly(g, &p.vars)).unwrap();
    }
    Ok(Output { text, stats })
}

/// Truncation used by `certify` when neither the flag nor the file sets one:
/// twice the largest degree among target and generators.
pub fn default_certify_degree(p: &Problem, target: &freesig_core::Polynomial) -> usize {
    let d = p.gens.iter().chain(Some(target)).filter_map(|f| f.degree()).max().unwrap_or(0);
    (2 * d).max(1)
}

/// `certify`: a certificate for `target`, or `None` if the remainder is nonzero.
pub fn certify_target(p: &Problem, flags: &RunFlags, target: &str) -> Result<(Option<String>, Stats)> {
    let target = parse_polynomial(target, &p.vars).context("parsing --target")?;
    let mut opts = flags.engine_options(p);
    opts.max_degree = Some(opts.max_degree.unwrap_or_else(|| default_certify_degree(p, &target)));
    let (r, wall): (LabelledResult, _) = run_engine(p, &opts, flags.timeout)?;
    let stats = Stats::from_engine("labelled", &r, &p.vars, wall);
    let cert = certify(&target, &r.basis, &p.gens)?;
    Ok((cert.map(|c| format_certificate(&c, &p.vars)), stats))
}

/// `syzygies`: one recovered syzygy per zero reduction, optionally followed by
/// the enumeration of syzygies up to a degree.
pub fn syzygies(p: &Problem, flags: &RunFlags, enumerate: Option<usize>) -> Result<Output> {
    let (r, wall): (SigResult, _) = run_engine(p, &flags.engine_options(p), flags.timeout)?;
    let names = &p.vars;
    let h = r.syzygy_signatures();
    let syz = syzygy_recovery(&r.basis, &h, &p.gens)?;
    let mut text = String::new();
    header(&mut text, &r, names);
    writeln!(text, "# recovered syzygies: {}", syz.len()).unwrap();
    for s in &syz {
        check_zero(s, p)?;
        writeln!(text, "{}", format_module_element(s, names)).unwrap();
    }
    if let Some(d) = enumerate {
        let glab = freesig_core::reconstruct::sig2labelled(&r.basis, &p.gens)?;
        let desc = SyzygyBasisDescription { generators: p.gens.clone(), explicit: syz, trivial_part: glab };
        let all: Vec<ModuleElement> = enumerate_syzygy_basis(&desc, d).collect();
        writeln!(text, "# syzygies up to degree {d}: {}", all.len()).unwrap();
        for s in &all {
            writeln!(text, "{}", format_module_element(s, names)).unwrap();
        }
    }
    Ok(Output { text, stats: Stats::from_engine("siggb", &r, names, wall) })
}

fn check_zero(s: &ModuleElement, p: &Problem) -> Result<()> {
    if !s.evaluate(&p.gens)?.is_zero() {
        bail!("recovered element does not evaluate to zero");
    }
    Ok(())
}
