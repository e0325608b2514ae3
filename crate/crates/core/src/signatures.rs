//! Labelled and signature polynomials, ambiguities, S-polynomials and s-reduction.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::bimodule::{cmp_shifted, is_shifted, ModuleElement, ModuleMonomial};
use crate::coeff::Coefficient;
use crate::index::LeadIndex;
use crate::poly::Polynomial;
use crate::word::Word;

/// What a polynomial carries alongside itself: either a full module element or
/// just its signature.
pub trait Label: Clone + fmt::Debug {
    /// Whether the label is a full module element. Signature-only labels cannot
    /// represent the result of a singular step.
    const FULL: bool;

    fn generator(index: usize) -> Self;

    /// The signature. Panics on a zero module element.
    fn sig(&self) -> &ModuleMonomial;

    fn sandwich(&self, a: &[u16], b: &[u16]) -> Self;

    fn scale(&self, c: &Coefficient) -> Self;

    /// `self - c·a·other·b`. For signature-only labels the result is the larger of
    /// the two signatures, which is right whenever they differ.
    fn sub_scaled(&self, c: &Coefficient, a: &[u16], other: &Self, b: &[u16]) -> Self;

    fn element(&self) -> Option<&ModuleElement>;
}

impl Label for ModuleElement {
    const FULL: bool = true;

    fn generator(index: usize) -> Self {
        ModuleElement::generator(index)
    }

    fn sig(&self) -> &ModuleMonomial {
        self.signature().expect("zero label has no signature")
    }

    fn sandwich(&self, a: &[u16], b: &[u16]) -> Self {
        ModuleElement::sandwich(self, a, b)
    }

    fn scale(&self, c: &Coefficient) -> Self {
        crate::lincomb::LinComb::scale(self, c)
    }

    fn sub_scaled(&self, c: &Coefficient, a: &[u16], other: &Self, b: &[u16]) -> Self {
        self.axpy(&-c, other, |m| m.sandwich(a, b))
    }

    fn element(&self) -> Option<&ModuleElement> {
        Some(self)
    }
}

impl Label for ModuleMonomial {
    const FULL: bool = false;

    fn generator(index: usize) -> Self {
        ModuleMonomial::unit(index)
    }

    fn sig(&self) -> &ModuleMonomial {
        self
    }

    fn sandwich(&self, a: &[u16], b: &[u16]) -> Self {
        ModuleMonomial::sandwich(self, a, b)
    }

    fn scale(&self, _c: &Coefficient) -> Self {
        self.clone()
    }

    fn sub_scaled(&self, _c: &Coefficient, a: &[u16], other: &Self, b: &[u16]) -> Self {
        if cmp_shifted(a, other, b, self) == Ordering::Greater {
            other.sandwich(a, b)
        } else {
            self.clone()
        }
    }

    fn element(&self) -> Option<&ModuleElement> {
        None
    }
}

/// A polynomial with its label: `f^[alpha]` or `f^(sigma)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Labelled<L> {
    pub poly: Polynomial,
    pub label: L,
}

/// `f^[alpha]` with `f` the evaluation of `alpha`.
pub type LabelledPolynomial = Labelled<ModuleElement>;
/// `f^(sigma)`.
pub type SigPolynomial = Labelled<ModuleMonomial>;

impl<L: Label> Labelled<L> {
    pub fn new(poly: Polynomial, label: L) -> Self {
        Labelled { poly, label }
    }

    pub fn generator(index: usize, f: Polynomial) -> Self {
        Labelled { poly: f, label: L::generator(index) }
    }

    pub fn sig(&self) -> &ModuleMonomial {
        self.label.sig()
    }

    pub fn lm(&self) -> &Word {
        self.poly.lm().expect("zero polynomial")
    }

    pub fn sandwich(&self, a: &[u16], b: &[u16]) -> Self {
        Labelled { poly: self.poly.sandwich(a, b), label: self.label.sandwich(a, b) }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Labelled { poly: self.poly.scale(c), label: self.label.scale(c) }
    }

    /// Scaled so the polynomial is monic. Zero polynomials are left alone.
    pub fn monic(&self) -> Self {
        match self.poly.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Forgets everything but the signature.
    pub fn to_sig(&self) -> SigPolynomial {
        Labelled { poly: self.poly.clone(), label: self.sig().clone() }
    }

    /// `self - c·a·other·b` on both components.
    fn sub_scaled(&mut self, c: &Coefficient, a: &[u16], other: &Self, b: &[u16]) {
        self.poly = self.poly.axpy(&-c, &other.poly, |w| w.sandwich(a, b));
        self.label = self.label.sub_scaled(c, a, &other.label, b);
    }
}

impl LabelledPolynomial {
    /// Whether the polynomial equals the evaluation of its label.
    pub fn is_consistent(&self, gens: &[Polynomial]) -> bool {
        self.label.evaluate(gens).map(|e| e == self.poly).unwrap_or(false)
    }
}

impl<L: fmt::Debug> fmt::Debug for Labelled<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} [{:?}]", self.poly, self.label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// A coincidence of two leading monomials inside `word = A·B·C`.
///
/// Overlap: `lm(first) = A·B`, `lm(second) = B·C`, all three nonempty.
/// Inclusion: `lm(first) = A·lm(second)·C`, `first != second`.
/// `first` and `second` are positions in whatever collection the caller uses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub word: Word,
    pub left: Word,
    pub right: Word,
    pub first: usize,
    pub second: usize,
}

impl Ambiguity {
    /// Multipliers `(a, b)` applied to the first constituent.
    pub fn first_mult(&self) -> (&[u16], &[u16]) {
        match self.kind {
            AmbiguityKind::Overlap => (&[], self.right.letters()),
            AmbiguityKind::Inclusion => (&[], &[]),
        }
    }

    /// Multipliers `(a, b)` applied to the second constituent.
    pub fn second_mult(&self) -> (&[u16], &[u16]) {
        match self.kind {
            AmbiguityKind::Overlap => (self.left.letters(), &[]),
            AmbiguityKind::Inclusion => (self.left.letters(), self.right.letters()),
        }
    }

    /// The two shifted signatures, first then second.
    pub fn shifted_sigs(&self, s1: &ModuleMonomial, s2: &ModuleMonomial) -> (ModuleMonomial, ModuleMonomial) {
        let (a1, b1) = self.first_mult();
        let (a2, b2) = self.second_mult();
        (s1.sandwich(a1, b1), s2.sandwich(a2, b2))
    }

    /// Signature of the S-polynomial if the ambiguity is regular.
    pub fn signature(&self, s1: &ModuleMonomial, s2: &ModuleMonomial) -> Option<ModuleMonomial> {
        let (a1, b1) = self.first_mult();
        let (a2, b2) = self.second_mult();
        let t1 = s1.sandwich(a1, b1);
        match cmp_shifted(a2, s2, b2, &t1) {
            Ordering::Equal => None,
            Ordering::Less => Some(t1),
            Ordering::Greater => Some(s2.sandwich(a2, b2)),
        }
    }
}

impl fmt::Debug for Ambiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}({:?}, {:?}, {:?}, #{}, #{})",
            self.kind, self.word, self.left, self.right, self.first, self.second
        )
    }
}

/// Overlaps with `u = A·B` first and `v = B·C` second.
fn overlaps_into(out: &mut Vec<Ambiguity>, i: usize, u: &[u16], j: usize, v: &[u16]) {
    let max_b = u.len().min(v.len());
    for k in 1..max_b {
        if u[u.len() - k..] == v[..k] {
            let left = Word::from(&u[..u.len() - k]);
            let right = Word::from(&v[k..]);
            let word = Word::from_letters([u, &v[k..]].concat());
            out.push(Ambiguity { kind: AmbiguityKind::Overlap, word, left, right, first: i, second: j });
        }
    }
}

/// Inclusions of `v` inside `u`, with `u` first.
fn inclusions_into(out: &mut Vec<Ambiguity>, i: usize, u: &[u16], j: usize, v: &[u16]) {
    if v.len() > u.len() {
        return;
    }
    for p in crate::word::occurrence_positions(u, v) {
        out.push(Ambiguity {
            kind: AmbiguityKind::Inclusion,
            word: Word::from(u),
            left: Word::from(&u[..p]),
            right: Word::from(&u[p + v.len()..]),
            first: i,
            second: j,
        });
    }
}

/// All ambiguities between the leading monomials `u` (of element `i`) and `v` (of
/// element `j`), in both directions.
///
/// With `i == j` only self-overlaps are produced. When `i != j` and `u == v` the
/// inclusion is reported once, with `i` first. Output is sorted by `|A|`, then by
/// direction, then by kind.
pub fn find_ambiguities(i: usize, u: &Word, j: usize, v: &Word) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    let (u, v) = (u.letters(), v.letters());
    overlaps_into(&mut out, i, u, j, v);
    if i == j {
        out.sort_by_key(|a| a.left.len());
        return out;
    }
    overlaps_into(&mut out, j, v, i, u);
    inclusions_into(&mut out, i, u, j, v);
    if u != v {
        inclusions_into(&mut out, j, v, i, u);
    }
    out.sort_by(|a, b| {
        a.left
            .len()
            .cmp(&b.left.len())
            .then_with(|| (a.first != i).cmp(&(b.first != i)))
            .then_with(|| a.kind.cmp(&b.kind))
    });
    out
}

/// The S-polynomial `(1/lc f)·f·C - (1/lc g)·A·g` (overlap) or
/// `(1/lc f)·f - (1/lc g)·A·g·C` (inclusion), labels combined alike.
///
/// For signature-only labels the result is meaningful only for regular ambiguities.
pub fn spoly<L: Label>(amb: &Ambiguity, f: &Labelled<L>, g: &Labelled<L>) -> Labelled<L> {
    let (a1, b1) = amb.first_mult();
    let (a2, b2) = amb.second_mult();
    let mut s = f.sandwich(a1, b1).scale(&f.poly.lc().inv());
    s.sub_scaled(&g.poly.lc().inv(), a2, g, b2);
    s
}

/// Whether the two shifted signatures of the ambiguity differ.
pub fn ambiguity_is_regular(amb: &Ambiguity, s1: &ModuleMonomial, s2: &ModuleMonomial) -> bool {
    amb.signature(s1, s2).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepKind {
    pub top: bool,
    pub regular: bool,
}

/// One s-reduction step of `f` by `g`.
///
/// The largest word of `f` admitting a step is used, at the occurrence with the
/// shortest left cofactor. Signature-only labels only take regular steps.
pub fn sreduce_step<L: Label>(f: &Labelled<L>, g: &Labelled<L>) -> Option<(Labelled<L>, StepKind)> {
    let lg = g.poly.lm().ok()?;
    let sig = f.sig();
    for (n, (w, c)) in f.poly.iter().enumerate() {
        for p in crate::word::occurrence_positions(w.letters(), lg.letters()) {
            let (a, b) = (&w.letters()[..p], &w.letters()[p + lg.len()..]);
            let regular = match cmp_shifted(a, g.sig(), b, sig) {
                Ordering::Less => true,
                Ordering::Equal if L::FULL => false,
                _ => continue,
            };
            let mut out = f.clone();
            out.sub_scaled(&(c / &g.poly.lc()), a, g, b);
            return Some((out, StepKind { top: n == 0, regular }));
        }
    }
    None
}

/// First regular reducer of word `w` under signature `sig`: smallest id, then
/// shortest left cofactor. Returns `(id, start)`.
pub(crate) fn regular_reducer<L: Label>(
    basis: &[Labelled<L>],
    index: &LeadIndex,
    w: &[u16],
    sig: &ModuleMonomial,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    index.for_each_match(w, 0, w.len(), |id, start| {
        if best.is_some_and(|b| b <= (id, start)) {
            return;
        }
        let g = &basis[id];
        let end = start + g.lm().len();
        if cmp_shifted(&w[..start], g.sig(), &w[end..], sig) == Ordering::Less {
            best = Some((id, start));
        }
    });
    best
}

/// Regular s-reduction of `f` by an indexed basis. With `top_only` the reduction
/// stops as soon as the leading term is regular top s-reduced.
pub fn regular_sreduce_indexed<L: Label>(
    f: &Labelled<L>,
    basis: &[Labelled<L>],
    index: &LeadIndex,
    top_only: bool,
) -> Labelled<L> {
    let sig = f.sig().clone();
    let mut rest = f.clone();
    let mut done = Vec::new();
    while let Some((w, c)) = rest.poly.leading() {
        match regular_reducer(basis, index, w.letters(), &sig) {
            Some((id, start)) => {
                let g = &basis[id];
                let w = w.letters();
                let (a, b) = (w[..start].to_vec(), w[start + g.lm().len()..].to_vec());
                let q = c / &g.poly.lc();
                rest.sub_scaled(&q, &a, g, &b);
            }
            None if top_only => break,
            None => done.push(rest.poly.pop_leading().unwrap()),
        }
    }
    if !done.is_empty() {
        done.extend(rest.poly.into_terms());
        rest.poly = Polynomial::from_sorted_unchecked(done);
    }
    rest
}

/// Regular s-reduction of `f` by `basis`, reducers tried in slice order.
pub fn regular_sreduce<L: Label>(f: &Labelled<L>, basis: &[Labelled<L>], top_only: bool) -> Labelled<L> {
    regular_sreduce_indexed(f, basis, &build_index(basis), top_only)
}

pub(crate) fn build_index<L: Label>(basis: &[Labelled<L>]) -> LeadIndex {
    let mut index = LeadIndex::new();
    for (i, g) in basis.iter().enumerate() {
        if let Ok(lm) = g.poly.lm() {
            index.insert(lm.letters(), i);
        }
    }
    index
}

/// Whether some `g` and `(a, b)` give `a·lm(g)·b = lm(p)` and `a·s(g)·b = s(p)`.
pub fn is_singular_top_reducible_indexed<L: Label>(p: &Labelled<L>, basis: &[Labelled<L>], index: &LeadIndex) -> bool {
    let Ok(lm) = p.poly.lm() else { return false };
    let w = lm.letters();
    let sig = p.sig();
    let mut found = false;
    index.for_each_match(w, 0, w.len(), |id, start| {
        if !found {
            let g = &basis[id];
            let end = start + g.lm().len();
            found = is_shifted(&w[..start], g.sig(), &w[end..], sig);
        }
    });
    found
}

pub fn is_singular_top_reducible<L: Label>(p: &Labelled<L>, basis: &[Labelled<L>]) -> bool {
    is_singular_top_reducible_indexed(p, basis, &build_index(basis))
}

/// `gamma·m·h - g·m·delta`, which always evaluates to zero.
pub fn trivial_syzygy(g: &LabelledPolynomial, h: &LabelledPolynomial, m: &Word) -> ModuleElement {
    let mh = h.poly.sandwich(m.letters(), &[]);
    let gm = g.poly.sandwich(&[], m.letters());
    g.label.mul_poly_right(&mh).sub(&h.label.mul_poly_left(&gm))
}

/// Signature of the trivial syzygy for `g`, `h`, `m` when the two candidate
/// leading monomials differ.
pub fn trivial_syzygy_signature<L: Label>(g: &Labelled<L>, h: &Labelled<L>, m: &Word) -> Option<ModuleMonomial> {
    let left = g.sig().sandwich(&[], &[m.letters(), h.lm().letters()].concat());
    let right = h.sig().sandwich(&[g.lm().letters(), m.letters()].concat(), &[]);
    match left.cmp(&right) {
        Ordering::Equal => None,
        Ordering::Greater => Some(left),
        Ordering::Less => Some(right),
    }
}
