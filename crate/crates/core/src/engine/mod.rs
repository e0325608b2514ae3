//! The enumeration loop shared by the labelled and the signature pipeline.

mod basis;

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};
use core::time::Duration;

pub use basis::{is_minimal, Basis};

use crate::bimodule::{ModuleElement, ModuleMonomial};
use crate::error::Error;
use crate::poly::Polynomial;
use crate::signatures::{
    find_ambiguities, is_singular_top_reducible_indexed, regular_sreduce_indexed, spoly, Ambiguity, Label, Labelled,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineOptions {
    /// Drop every S-polynomial whose ambiguity word is longer than this.
    pub max_degree: Option<usize>,
    pub syzygy_criterion: bool,
    pub f5_criterion: bool,
    pub singular_criterion: bool,
    /// Reduce only until the leading term is regular s-reduced.
    pub top_only: bool,
    /// Stop after this many reductions (generators included).
    pub pairs_budget: Option<usize>,
    /// Keep one trace entry per popped element.
    pub record_trace: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            max_degree: None,
            syzygy_criterion: true,
            f5_criterion: true,
            singular_criterion: true,
            top_only: false,
            pairs_budget: None,
            record_trace: false,
        }
    }
}

impl EngineOptions {
    /// No elimination criteria at all.
    pub fn plain() -> Self {
        EngineOptions { syzygy_criterion: false, f5_criterion: false, singular_criterion: false, ..Self::default() }
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn with_budget(mut self, n: usize) -> Self {
        self.pairs_budget = Some(n);
        self
    }
}

/// Asked once per loop iteration; returning `true` stops the run.
pub trait Interrupt {
    fn should_stop(&mut self) -> bool;
}

/// Never interrupts.
pub struct NoInterrupt;

impl Interrupt for NoInterrupt {
    fn should_stop(&mut self) -> bool {
        false
    }
}

impl<F: FnMut() -> bool> Interrupt for F {
    fn should_stop(&mut self) -> bool {
        self()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CriteriaHits {
    pub syzygy: usize,
    pub f5: usize,
    pub singular: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    /// S-polynomials that survived the criteria and were reduced.
    pub spolys_reduced: usize,
    /// Those of them that reduced to zero.
    pub zero_reductions: usize,
    pub criteria_hits: CriteriaHits,
    /// Nonzero normal forms dropped because they were singular top s-reducible.
    pub singular_discards: usize,
    pub pairs_generated: usize,
    pub basis_size: usize,
    /// Popped signatures that were smaller than their predecessor. Always zero.
    pub order_violations: usize,
    /// Left empty by the core; filled in by callers that own a clock.
    pub wall_time: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    /// Some S-polynomials above this degree were dropped.
    Truncated {
        degree: usize,
    },
    /// Stopped by the budget or an interrupt; the basis is complete below `at`.
    Interrupted {
        at: ModuleMonomial,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Syzygy,
    F5,
    Singular,
    Zero,
    SingularTopReducible,
    Added,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub sig: ModuleMonomial,
    /// Basis size at pop time; the basis only grows, so this identifies it.
    pub basis_len: usize,
    /// Answer of the F5 criterion if it was consulted.
    pub f5: Option<bool>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct EngineResult<L> {
    pub basis: Vec<Labelled<L>>,
    /// Labels of everything that reduced to zero, in discovery order.
    pub syzygies: Vec<L>,
    pub stats: RunStats,
    pub status: Status,
    /// Truncation was requested for inhomogeneous input.
    pub heuristic_truncation: bool,
    pub trace: Vec<TraceEntry>,
}

impl<L: Label> EngineResult<L> {
    pub fn syzygy_signatures(&self) -> Vec<ModuleMonomial> {
        self.syzygies.iter().map(|l| l.sig().clone()).collect()
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.basis.iter().map(|g| g.poly.clone()).collect()
    }
}

pub type SigResult = EngineResult<ModuleMonomial>;
pub type LabelledResult = EngineResult<ModuleElement>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Source {
    Generator(usize),
    Pair(Ambiguity),
}

#[derive(Debug)]
struct Pending {
    sig: ModuleMonomial,
    seq: u64,
    source: Source,
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}

impl Eq for Pending {}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sig.cmp(&other.sig).then(self.seq.cmp(&other.seq))
    }
}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Pending S-polynomials, popped by smallest signature and then insertion order.
#[derive(Default)]
struct PairQueue {
    heap: BinaryHeap<Reverse<Pending>>,
    seq: u64,
}

impl PairQueue {
    fn push(&mut self, sig: ModuleMonomial, source: Source) {
        self.heap.push(Reverse(Pending { sig, seq: self.seq, source }));
        self.seq += 1;
    }

    fn pop(&mut self) -> Option<Pending> {
        self.heap.pop().map(|r| r.0)
    }

    fn peek_sig(&self) -> Option<&ModuleMonomial> {
        self.heap.peek().map(|r| &r.0.sig)
    }
}

fn check_input(gens: &[Polynomial]) -> Result<(), Error> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    if let Some(i) = gens.iter().position(|g| g.is_zero()) {
        return Err(Error::ZeroGenerator(i));
    }
    Ok(())
}

/// Signature pipeline: a minimal signature Gröbner basis and the signatures of the
/// syzygies found along the way.
pub fn siggb(gens: &[Polynomial], opts: &EngineOptions) -> Result<SigResult, Error> {
    run(gens, opts, &mut NoInterrupt)
}

/// Labelled pipeline: same control flow, carrying full module labels.
pub fn labelledgb(gens: &[Polynomial], opts: &EngineOptions) -> Result<LabelledResult, Error> {
    run(gens, opts, &mut NoInterrupt)
}

/// The main loop, generic over the label kind.
pub fn run<L: Label, I: Interrupt>(
    gens: &[Polynomial],
    opts: &EngineOptions,
    interrupt: &mut I,
) -> Result<EngineResult<L>, Error> {
    check_input(gens)?;
    let mut stats = RunStats::default();
    let mut basis: Basis<L> = Basis::new();
    let mut syz: Vec<L> = Vec::new();
    let mut syz_sigs: Vec<ModuleMonomial> = Vec::new();
    let mut queue = PairQueue::default();
    let mut trace = Vec::new();
    let mut truncated = false;
    let mut reductions = 0usize;
    let heuristic_truncation = opts.max_degree.is_some() && !gens.iter().all(|g| g.is_homogeneous());

    for (i, f) in gens.iter().enumerate() {
        if opts.max_degree.is_some_and(|d| f.lm().map_or(0, |w| w.len()) > d) {
            truncated = true;
            continue;
        }
        queue.push(ModuleMonomial::unit(i), Source::Generator(i));
    }

    let mut last: Option<ModuleMonomial> = None;
    let mut status = None;
    while let Some(next) = queue.peek_sig() {
        if opts.pairs_budget.is_some_and(|b| reductions >= b) || interrupt.should_stop() {
            status = Some(Status::Interrupted { at: next.clone() });
            break;
        }
        let item = queue.pop().unwrap();
        let sigma = item.sig;
        if last.as_ref().is_some_and(|l| *l > sigma) {
            stats.order_violations += 1;
            debug_assert!(false, "signatures popped out of order");
        }
        last = Some(sigma.clone());
        let basis_len = basis.len();
        let mut f5_answer = None;
        let record = |outcome: Outcome, f5: Option<bool>, trace: &mut Vec<TraceEntry>| {
            if opts.record_trace {
                trace.push(TraceEntry { sig: sigma.clone(), basis_len, f5, outcome });
            }
        };

        if opts.syzygy_criterion && Basis::<L>::divisible_by_any(&syz_sigs, &sigma) {
            stats.criteria_hits.syzygy += 1;
            record(Outcome::Syzygy, None, &mut trace);
            continue;
        }
        if opts.f5_criterion {
            let hit = basis.f5_criterion(&sigma);
            f5_answer = Some(hit);
            if hit {
                stats.criteria_hits.f5 += 1;
                record(Outcome::F5, f5_answer, &mut trace);
                continue;
            }
        }
        if opts.singular_criterion && basis.singular_criterion(&sigma) {
            stats.criteria_hits.singular += 1;
            record(Outcome::Singular, f5_answer, &mut trace);
            continue;
        }

        let p = match &item.source {
            Source::Generator(i) => Labelled::generator(*i, gens[*i].clone()),
            Source::Pair(a) => {
                stats.spolys_reduced += 1;
                spoly(a, &basis.elems()[a.first], &basis.elems()[a.second])
            }
        };
        debug_assert_eq!(p.sig(), &sigma);
        reductions += 1;
        let r = regular_sreduce_indexed(&p, basis.elems(), basis.index(), opts.top_only);
        if r.poly.is_zero() {
            if matches!(item.source, Source::Pair(_)) {
                stats.zero_reductions += 1;
            }
            syz_sigs.push(sigma.clone());
            syz.push(r.label);
            record(Outcome::Zero, f5_answer, &mut trace);
            continue;
        }
        if is_singular_top_reducible_indexed(&r, basis.elems(), basis.index()) {
            stats.singular_discards += 1;
            record(Outcome::SingularTopReducible, f5_answer, &mut trace);
            continue;
        }
        record(Outcome::Added, f5_answer, &mut trace);
        let new = basis.push(r.monic());
        let (pairs, dropped) = pairs_for(basis.elems(), new, opts.max_degree);
        truncated |= dropped;
        stats.pairs_generated += pairs.len();
        for (sig, amb) in pairs {
            queue.push(sig, Source::Pair(amb));
        }
    }

    stats.basis_size = basis.len();
    let status = status.unwrap_or(match (truncated, opts.max_degree) {
        (true, Some(d)) => Status::Truncated { degree: d },
        _ => Status::Complete,
    });
    Ok(EngineResult { basis: basis.into_elems(), syzygies: syz, stats, status, heuristic_truncation, trace })
}

/// The F5 criterion for `sigma` against `basis`.
pub fn f5_criterion<L: Label>(sigma: &ModuleMonomial, basis: &[Labelled<L>]) -> bool {
    Basis::from_elems(basis.iter().cloned()).f5_criterion(sigma)
}

/// The syzygy criterion: some element of `h` divides `sigma`.
pub fn syzygy_criterion(sigma: &ModuleMonomial, h: &[ModuleMonomial]) -> bool {
    Basis::<ModuleMonomial>::divisible_by_any(h, sigma)
}

/// The singular criterion: some basis element has signature exactly `sigma`.
pub fn singular_criterion<L: Label>(sigma: &ModuleMonomial, basis: &[Labelled<L>]) -> bool {
    basis.iter().any(|g| g.sig() == sigma)
}

/// All regular ambiguities between `basis[new]` and `basis[..=new]` with their
/// S-polynomial signatures, dropping words longer than `max_degree`.
pub fn generate_pairs<L: Label>(
    basis: &[Labelled<L>],
    new: usize,
    max_degree: Option<usize>,
) -> Vec<(ModuleMonomial, Ambiguity)> {
    pairs_for(basis, new, max_degree).0
}

fn pairs_for<L: Label>(
    basis: &[Labelled<L>],
    new: usize,
    max_degree: Option<usize>,
) -> (Vec<(ModuleMonomial, Ambiguity)>, bool) {
    let mut out = Vec::new();
    let mut dropped = false;
    let lm_new = basis[new].lm();
    for j in 0..=new {
        for amb in find_ambiguities(new, lm_new, j, basis[j].lm()) {
            let Some(sig) = amb.signature(basis[amb.first].sig(), basis[amb.second].sig()) else { continue };
            if max_degree.is_some_and(|d| amb.word.len() > d) {
                dropped = true;
                continue;
            }
            out.push((sig, amb));
        }
    }
    (out, dropped)
}
