use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bimodule::{cmp_shifted, divides, ModuleMonomial};
use crate::index::LeadIndex;
use crate::signatures::{Label, Labelled};

/// The growing basis with the lookups the main loop needs.
#[derive(Clone, Debug)]
pub struct Basis<L> {
    elems: Vec<Labelled<L>>,
    index: LeadIndex,
    sigs: BTreeSet<ModuleMonomial>,
    by_gen: Vec<Vec<usize>>,
}

impl<L: Label> Default for Basis<L> {
    fn default() -> Self {
        Basis { elems: Vec::new(), index: LeadIndex::new(), sigs: BTreeSet::new(), by_gen: Vec::new() }
    }
}

impl<L: Label> Basis<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_elems(elems: impl IntoIterator<Item = Labelled<L>>) -> Self {
        let mut b = Self::new();
        for e in elems {
            b.push(e);
        }
        b
    }

    pub fn push(&mut self, e: Labelled<L>) -> usize {
        let id = self.elems.len();
        self.index.insert(e.lm().letters(), id);
        let s = e.sig();
        if self.by_gen.len() <= s.index {
            self.by_gen.resize(s.index + 1, Vec::new());
        }
        self.by_gen[s.index].push(id);
        self.sigs.insert(s.clone());
        self.elems.push(e);
        id
    }

    pub fn elems(&self) -> &[Labelled<L>] {
        &self.elems
    }

    pub fn into_elems(self) -> Vec<Labelled<L>> {
        self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn index(&self) -> &LeadIndex {
        &self.index
    }

    /// Some element already has signature `sigma`.
    pub fn singular_criterion(&self, sigma: &ModuleMonomial) -> bool {
        self.sigs.contains(sigma)
    }

    /// `sigma` is a multiple of the signature of a trivial syzygy
    /// `gamma·m·g' - g·m·gamma'` of two basis elements (in either role).
    pub fn f5_criterion(&self, sigma: &ModuleMonomial) -> bool {
        let Some(cands) = self.by_gen.get(sigma.index) else { return false };
        let (big_a, big_b) = (sigma.left.letters(), sigma.right.letters());
        for &gi in cands {
            let g = &self.elems[gi];
            let s = g.sig();
            let (c, d) = (s.left.letters(), s.right.letters());
            if !big_a.ends_with(c) || !big_b.starts_with(d) {
                continue;
            }
            // condition 1: sigma = a·s(g)·m·lm(g')·b
            let mut hit = false;
            self.index.for_each_match(big_b, d.len(), big_b.len(), |hi, p| {
                if hit {
                    return;
                }
                let h = &self.elems[hi];
                let m = &big_b[d.len()..p];
                hit = side_dominates(s, m, h.lm().letters(), g.lm().letters(), h.sig());
            });
            if hit {
                return true;
            }
            // condition 2 with g in the second role: sigma = a·lm(h)·m·s(g)·b
            let a_rest = &big_a[..big_a.len() - c.len()];
            self.index.for_each_match(a_rest, 0, a_rest.len(), |hi, p| {
                if hit {
                    return;
                }
                let h = &self.elems[hi];
                let e = p + h.lm().len();
                let m = &a_rest[e..];
                hit = side_dominates_left(h.lm().letters(), m, s, h.sig(), g.lm().letters());
            });
            if hit {
                return true;
            }
        }
        false
    }

    /// Some stored syzygy signature divides `sigma`.
    pub fn divisible_by_any(h: &[ModuleMonomial], sigma: &ModuleMonomial) -> bool {
        h.iter().any(|eta| divides(eta, sigma))
    }
}

/// `s·m·lm_h ≻ lm_g·m·s_h`
fn side_dominates(s: &ModuleMonomial, m: &[u16], lm_h: &[u16], lm_g: &[u16], s_h: &ModuleMonomial) -> bool {
    let left = s.sandwich(&[], &[m, lm_h].concat());
    let pre = [lm_g, m].concat();
    cmp_shifted(&pre, s_h, &[], &left) == Ordering::Less
}

/// `lm_h·m·s ≻ s_h·m·lm_g`
fn side_dominates_left(lm_h: &[u16], m: &[u16], s: &ModuleMonomial, s_h: &ModuleMonomial, lm_g: &[u16]) -> bool {
    let right = s.sandwich(&[lm_h, m].concat(), &[]);
    let post = [m, lm_g].concat();
    cmp_shifted(&[], s_h, &post, &right) == Ordering::Less
}

/// Whether no element is top s-reducible by another one.
pub fn is_minimal<L: Label>(elems: &[Labelled<L>]) -> bool {
    let index = crate::signatures::build_index(elems);
    elems.iter().enumerate().all(|(i, g)| {
        let w = g.lm().letters();
        let mut reducible = false;
        index.for_each_match(w, 0, w.len(), |j, p| {
            if j != i && !reducible {
                let h = &elems[j];
                let e = p + h.lm().len();
                reducible = cmp_shifted(&w[..p], h.sig(), &w[e..], g.sig()) != Ordering::Greater;
            }
        });
        !reducible
    })
}
