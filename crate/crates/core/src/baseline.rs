//! Classical Buchberger enumeration with optional chain criterion.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::engine::{Interrupt, NoInterrupt};
use crate::error::Error;
use crate::index::LeadIndex;
use crate::poly::{reduce_indexed, Polynomial};
use crate::signatures::{find_ambiguities, Ambiguity};
use crate::word::occurrence_positions;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Drop pairs whose ambiguity word is longer than this.
    pub max_degree: Option<usize>,
    pub chain_criterion: bool,
    /// Drop elements whose leading monomial becomes reducible and keep tails in
    /// normal form. Off by default, so the enumerated set only grows.
    pub interreduce: bool,
    /// Stop after this many reductions (inputs included).
    pub pairs_budget: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BaselineStats {
    pub spolys_reduced: usize,
    pub zero_reductions: usize,
    pub chain_discards: usize,
    pub pairs_generated: usize,
    pub basis_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaselineStatus {
    Complete,
    Truncated {
        degree: usize,
    },
    /// Stopped early; every pair with a word shorter than `degree` was handled.
    Interrupted {
        degree: usize,
    },
}

#[derive(Clone, Debug)]
pub struct BaselineResult {
    /// Monic and sorted by leading monomial; interreduced only with
    /// [`BuchbergerOptions::interreduce`]. See [`reduced_gb`].
    pub basis: Vec<Polynomial>,
    pub stats: BaselineStats,
    pub status: BaselineStatus,
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Item {
    Input(usize),
    Pair(usize, usize, usize),
}

struct State {
    polys: Vec<Polynomial>,
    alive: Vec<bool>,
    index: LeadIndex,
    heap: BinaryHeap<Reverse<(usize, u64, Item)>>,
    ambs: Vec<Ambiguity>,
    seq: u64,
    max_degree: Option<usize>,
    interreduce: bool,
    truncated: bool,
    stats: BaselineStats,
}

impl State {
    fn push(&mut self, degree: usize, item: Item) {
        self.heap.push(Reverse((degree, self.seq, item)));
        self.seq += 1;
    }

    fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce_indexed(f, &self.polys, &self.index, |_| true)
    }

    /// Inserts a nonzero normal form and queues its pairs.
    fn add(&mut self, h: Polynomial) {
        let mut work = alloc::vec![h];
        while let Some(h) = work.pop() {
            let h = self.reduce(&h);
            if h.is_zero() {
                continue;
            }
            let h = h.monic();
            let lm = h.lm().unwrap().clone();
            let id = self.polys.len();
            for g in 0..id {
                if !self.interreduce || !self.alive[g] {
                    continue;
                }
                let glm = self.polys[g].lm().unwrap().letters();
                if occurrence_positions(glm, lm.letters()).next().is_some() {
                    self.alive[g] = false;
                    self.index.remove(glm, g);
                    work.push(core::mem::take(&mut self.polys[g]));
                }
            }
            self.polys.push(h);
            self.alive.push(true);
            self.index.insert(lm.letters(), id);
            for g in 0..id {
                if self.interreduce
                    && self.alive[g]
                    && self.polys[g]
                        .support()
                        .skip(1)
                        .any(|w| occurrence_positions(w.letters(), lm.letters()).next().is_some())
                {
                    let lt = self.polys[g].lt();
                    let tail = self.polys[g].sub(&lt);
                    self.polys[g] = lt.add(&self.reduce(&tail));
                }
            }
            for j in 0..=id {
                if !self.alive[j] {
                    continue;
                }
                for amb in find_ambiguities(id, &lm, j, self.polys[j].lm().unwrap()) {
                    if self.max_degree.is_some_and(|d| amb.word.len() > d) {
                        self.truncated = true;
                        continue;
                    }
                    self.stats.pairs_generated += 1;
                    let k = self.ambs.len();
                    let (f, g) = (amb.first, amb.second);
                    let deg = amb.word.len();
                    self.ambs.push(amb);
                    self.push(deg, Item::Pair(f, g, k));
                }
            }
        }
    }
}

/// Noncommutative Buchberger algorithm with fair selection: pairs are handled by
/// increasing length of their ambiguity word, then in insertion order.
pub fn buchberger(gens: &[Polynomial], opts: &BuchbergerOptions) -> Result<BaselineResult, Error> {
    buchberger_with(gens, opts, &mut NoInterrupt)
}

pub fn buchberger_with<I: Interrupt>(
    gens: &[Polynomial],
    opts: &BuchbergerOptions,
    interrupt: &mut I,
) -> Result<BaselineResult, Error> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    if let Some(i) = gens.iter().position(|g| g.is_zero()) {
        return Err(Error::ZeroGenerator(i));
    }
    let mut st = State {
        polys: Vec::new(),
        alive: Vec::new(),
        index: LeadIndex::new(),
        heap: BinaryHeap::new(),
        ambs: Vec::new(),
        seq: 0,
        max_degree: opts.max_degree,
        interreduce: opts.interreduce,
        truncated: false,
        stats: BaselineStats::default(),
    };
    for (i, g) in gens.iter().enumerate() {
        let d = g.lm().unwrap().len();
        if opts.max_degree.is_some_and(|m| d > m) {
            st.truncated = true;
            continue;
        }
        st.push(d, Item::Input(i));
    }
    let mut reductions = 0;
    let mut status = None;
    while let Some(Reverse((deg, _, _))) = st.heap.peek() {
        if opts.pairs_budget.is_some_and(|b| reductions >= b) || interrupt.should_stop() {
            status = Some(BaselineStatus::Interrupted { degree: *deg });
            break;
        }
        let Reverse((_, _, item)) = st.heap.pop().unwrap();
        let p = match item {
            Item::Input(i) => gens[i].clone(),
            Item::Pair(f, g, k) => {
                if !st.alive[f] || !st.alive[g] {
                    continue;
                }
                let amb = &st.ambs[k];
                if opts.chain_criterion && chain_hit(amb, &st.polys, &st.index) {
                    st.stats.chain_discards += 1;
                    continue;
                }
                st.stats.spolys_reduced += 1;
                monic_spoly(amb, &st.polys[f], &st.polys[g])
            }
        };
        reductions += 1;
        let is_pair = matches!(item, Item::Pair(..));
        let r = st.reduce(&p);
        if r.is_zero() {
            if is_pair {
                st.stats.zero_reductions += 1;
            }
            continue;
        }
        st.add(r);
    }
    let mut basis: Vec<Polynomial> = st.polys.into_iter().zip(st.alive).filter_map(|(p, a)| a.then_some(p)).collect();
    basis.sort_by(|a, b| a.lm().unwrap().cmp(b.lm().unwrap()));
    st.stats.basis_size = basis.len();
    let status = status.unwrap_or(match (st.truncated, opts.max_degree) {
        (true, Some(d)) => BaselineStatus::Truncated { degree: d },
        _ => BaselineStatus::Complete,
    });
    Ok(BaselineResult { basis, stats: st.stats, status })
}

/// `f·C - A·g` or `f - A·g·C` after making both monic.
fn monic_spoly(amb: &Ambiguity, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (a1, b1) = amb.first_mult();
    let (a2, b2) = amb.second_mult();
    let s = f.sandwich(a1, b1).scale(&f.lc().inv());
    s.axpy(&-g.lc().inv(), g, |w| w.sandwich(a2, b2))
}

/// Chain criterion for `amb` against `basis`, where `amb.first` and `amb.second`
/// index into `basis`.
///
/// The pair is redundant when the leading monomial of a third element `h` occurs in
/// the ambiguity word such that the occurrence is, relative to each of the two
/// constituents, either disjoint or part of a strictly shorter ambiguity. With
/// pairs handled by increasing word length those shorter ambiguities are resolved
/// already.
pub fn chain_criterion(amb: &Ambiguity, basis: &[Polynomial]) -> bool {
    let mut index = LeadIndex::new();
    for (i, g) in basis.iter().enumerate() {
        if let Ok(lm) = g.lm() {
            index.insert(lm.letters(), i);
        }
    }
    chain_hit(amb, basis, &index)
}

fn chain_hit(amb: &Ambiguity, basis: &[Polynomial], index: &LeadIndex) -> bool {
    let w = amb.word.letters();
    let n = w.len();
    let f = (0, basis[amb.first].lm().unwrap().len());
    let ga = amb.left.len();
    let g = (ga, ga + basis[amb.second].lm().unwrap().len());
    let resolved = |x: (usize, usize), h: (usize, usize)| x.1 <= h.0 || h.1 <= x.0 || x.0.max(h.1) - x.0.min(h.0) < n;
    let mut hit = false;
    index.for_each_match(w, 0, n, |id, s| {
        if hit || id == amb.first || id == amb.second {
            return;
        }
        let h = (s, s + basis[id].lm().unwrap().len());
        hit = h.1 - h.0 > 0 && resolved(f, h) && resolved(g, h);
    });
    hit
}

/// The reduced form of a Gröbner basis: monic, no leading monomial divisible by
/// another, tails in normal form. Sorted by leading monomial.
pub fn reduced_gb(basis: &[Polynomial]) -> Vec<Polynomial> {
    let mut elems: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    elems.sort_by(|a, b| a.lm().unwrap().cmp(b.lm().unwrap()));
    let mut index = LeadIndex::new();
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in elems {
        let lm = g.lm().unwrap().letters();
        if index.divides_any(lm) {
            continue;
        }
        index.insert(lm, kept.len());
        kept.push(g);
    }
    let mut out = Vec::with_capacity(kept.len());
    for g in &kept {
        let lt = g.lt();
        let tail = g.sub(&lt);
        out.push(lt.add(&reduce_indexed(&tail, &kept, &index, |_| true)));
    }
    out
}
