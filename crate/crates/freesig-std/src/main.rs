use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use freesig_std::bench::{format_table, load_suite, run_suite};
use freesig_std::commands::{self, Output, RunFlags};
use freesig_std::problem::Problem;
use freesig_std::stats::Stats;

/// Signature Gröbner bases of two-sided ideals in the free algebra over ℚ.
#[derive(Parser)]
#[command(name = "freesig", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Problem file.
    problem: PathBuf,
    /// Drop S-polynomials and generators above this degree.
    #[arg(long)]
    maxdeg: Option<usize>,
    #[arg(long)]
    no_syzygy_crit: bool,
    #[arg(long)]
    no_f5_crit: bool,
    #[arg(long)]
    no_singular_crit: bool,
    /// Reduce only leading terms.
    #[arg(long)]
    top_only: bool,
    /// Stop after this many reductions.
    #[arg(long)]
    pairs_budget: Option<usize>,
    /// Stop after this many seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Write run statistics as JSON to this path.
    #[arg(long)]
    stats_json: Option<PathBuf>,
}

impl Common {
    fn flags(&self) -> RunFlags {
        RunFlags {
            max_degree: self.maxdeg,
            no_syzygy_crit: self.no_syzygy_crit,
            no_f5_crit: self.no_f5_crit,
            no_singular_crit: self.no_singular_crit,
            top_only: self.top_only,
            pairs_budget: self.pairs_budget,
            timeout: self.timeout.map(Duration::from_secs_f64),
        }
    }

    fn load(&self) -> Result<Problem> {
        Problem::load(&self.problem).with_context(|| self.problem.display().to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Signature basis with signatures.
    Compute(Common),
    /// Labelled basis with full module labels.
    Labelled(Common),
    /// Classical Buchberger enumeration.
    Buchberger {
        #[command(flatten)]
        common: Common,
        /// Discard pairs by the chain criterion.
        #[arg(long)]
        chain: bool,
        /// Keep the basis interreduced.
        #[arg(long)]
        interreduce: bool,
    },
    /// Ideal membership certificate for a polynomial.
    Certify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        target: String,
    },
    /// Recovered syzygies of the generators.
    Syzygies {
        #[command(flatten)]
        common: Common,
        /// Also list syzygies up to this degree.
        #[arg(long)]
        enumerate: Option<usize>,
    },
    /// Run a suite with all three algorithms and print a table.
    Bench {
        suite: PathBuf,
        /// Per-run limit in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Write all cells as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn write_stats(path: Option<&Path>, stats: &Stats) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, stats.to_json() + "\n").with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn finish(c: &Common, out: Output) -> Result<ExitCode> {
    print!("{}", out.text);
    write_stats(c.stats_json.as_deref(), &out.stats)?;
    Ok(ExitCode::SUCCESS)
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute(c) => finish(&c, commands::compute(&c.load()?, &c.flags())?),
        Command::Labelled(c) => finish(&c, commands::labelled(&c.load()?, &c.flags())?),
        Command::Buchberger { common, chain, interreduce } => {
            finish(&common, commands::buchberger(&common.load()?, &common.flags(), chain, interreduce)?)
        }
        Command::Certify { common, target } => {
            let (cert, stats) = commands::certify_target(&common.load()?, &common.flags(), &target)?;
            write_stats(common.stats_json.as_deref(), &stats)?;
            match cert {
                Some(text) => {
                    print!("{text}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprintln!("not certified: the target does not reduce to zero ({})", stats.status);
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Syzygies { common, enumerate } => {
            finish(&common, commands::syzygies(&common.load()?, &common.flags(), enumerate)?)
        }
        Command::Bench { suite, timeout, json } => {
            let cells = run_suite(&load_suite(&suite)?, timeout.map(Duration::from_secs_f64))?;
            print!("{}", format_table(&cells));
            if let Some(p) = json {
                let text = serde_json::to_string_pretty(&cells)?;
                std::fs::write(&p, text + "\n").with_context(|| format!("writing {}", p.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
