//! Machine-readable run statistics.

use std::time::Duration;

use freesig_core::baseline::{BaselineResult, BaselineStatus};
use freesig_core::engine::{EngineResult, Status};
use freesig_core::signatures::Label;
use serde::{Deserialize, Serialize};

use crate::format::format_sig;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hits {
    pub syzygy: usize,
    pub f5: usize,
    pub singular: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub algorithm: String,
    pub spolys: usize,
    pub zero_reductions: usize,
    pub criteria_hits: Hits,
    pub basis_size: usize,
    pub status: String,
    pub wall_time_ms: f64,
    #[serde(default)]
    pub singular_discards: usize,
    #[serde(default)]
    pub chain_discards: usize,
    #[serde(default)]
    pub heuristic_truncation: bool,
}

pub fn engine_status(status: &Status, names: &[String]) -> String {
    match status {
        Status::Complete => "complete".into(),
        Status::Truncated { degree } => format!("truncated at degree {degree}"),
        Status::Interrupted { at } => format!("up to signature {}", format_sig(at, names)),
    }
}

pub fn baseline_status(status: &BaselineStatus) -> String {
    match status {
        BaselineStatus::Complete => "complete".into(),
        BaselineStatus::Truncated { degree } => format!("truncated at degree {degree}"),
        BaselineStatus::Interrupted { degree } => format!("interrupted at degree {degree}"),
    }
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

impl Stats {
    pub fn from_engine<L: Label>(algorithm: &str, r: &EngineResult<L>, names: &[String], wall: Duration) -> Self {
        let s = &r.stats;
        Stats {
            algorithm: algorithm.into(),
            spolys: s.spolys_reduced,
            zero_reductions: s.zero_reductions,
            criteria_hits: Hits {
                syzygy: s.criteria_hits.syzygy,
                f5: s.criteria_hits.f5,
                singular: s.criteria_hits.singular,
            },
            basis_size: s.basis_size,
            status: engine_status(&r.status, names),
            wall_time_ms: millis(wall),
            singular_discards: s.singular_discards,
            chain_discards: 0,
            heuristic_truncation: r.heuristic_truncation,
        }
    }

    pub fn from_baseline(algorithm: &str, r: &BaselineResult, wall: Duration) -> Self {
        let s = &r.stats;
        Stats {
            algorithm: algorithm.into(),
            spolys: s.spolys_reduced,
            zero_reductions: s.zero_reductions,
            criteria_hits: Hits::default(),
            basis_size: s.basis_size,
            status: baseline_status(&r.status),
            wall_time_ms: millis(wall),
            singular_discards: 0,
            chain_discards: s.chain_discards,
            heuristic_truncation: false,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize")
    }
}
