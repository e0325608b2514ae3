//! Noncommutative polynomials and classical reduction.

use alloc::vec::Vec;
use core::fmt;

use crate::coeff::Coefficient;
use crate::error::Error;
use crate::index::LeadIndex;
use crate::lincomb::LinComb;
use crate::word::Word;

/// Element of the free algebra over the rationals.
pub type Polynomial = LinComb<Word>;

impl LinComb<Word> {
    pub fn constant(c: Coefficient) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, Coefficient::one())
    }

    pub fn lm(&self) -> Result<&Word, Error> {
        self.leading().map(|t| &t.0).ok_or(Error::ZeroLeadingMonomial)
    }

    /// Leading coefficient, `0` for the zero polynomial.
    pub fn lc(&self) -> Coefficient {
        self.leading().map(|t| t.1.clone()).unwrap_or_default()
    }

    /// Leading term as a polynomial, `0` for the zero polynomial.
    pub fn lt(&self) -> Polynomial {
        match self.leading() {
            Some((w, c)) => Self::monomial(w.clone(), c.clone()),
            None => Self::zero(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.iter().map(|t| &t.0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.iter().map(|t| t.0.len()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.iter().map(|t| t.0.len());
        match it.next() {
            Some(d) => it.all(|e| e == d),
            None => true,
        }
    }

    /// `a · self · b`
    pub fn sandwich(&self, a: &[u16], b: &[u16]) -> Self {
        if a.is_empty() && b.is_empty() {
            return self.clone();
        }
        self.map_monotone(|w| w.sandwich(a, b))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (u, c) in self.iter() {
            for (v, d) in other.iter() {
                terms.push((u.concat(v), c * d));
            }
        }
        Self::from_terms(terms)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(Coefficient::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scaled to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }
}

impl fmt::Debug for LinComb<Word> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{w:?}")?;
        }
        Ok(())
    }
}

/// One reduction step of `f` by `g`, or `None` if no word of `f` contains `lm(g)`.
///
/// The largest reducible word of `f` is reduced, at the occurrence with the shortest
/// left cofactor.
pub fn reduce_step(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let lg = g.lm().ok()?;
    for (w, c) in f.iter() {
        if let Some(p) = crate::word::occurrence_positions(w.letters(), lg.letters()).next() {
            let (a, b) = (&w.letters()[..p], &w.letters()[p + lg.len()..]);
            let q = -&(c / &g.lc());
            return Some(f.axpy(&q, g, |v| v.sandwich(a, b)));
        }
    }
    None
}

/// Full normal form of `f` modulo `basis`.
///
/// Words are reduced from the largest down; for each word, reducers are tried in
/// slice order and the occurrence with the shortest left cofactor wins.
pub fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut index = LeadIndex::new();
    for (i, g) in basis.iter().enumerate() {
        if let Ok(lm) = g.lm() {
            index.insert(lm.letters(), i);
        }
    }
    reduce_indexed(f, basis, &index, |_| true)
}

/// Full reduction using a prebuilt index; `live` filters ids that may be used.
pub(crate) fn reduce_indexed(
    f: &Polynomial,
    basis: &[Polynomial],
    index: &LeadIndex,
    live: impl Fn(usize) -> bool,
) -> Polynomial {
    let mut rest = f.clone();
    let mut done: Vec<(Word, Coefficient)> = Vec::new();
    while let Some((w, c)) = rest.leading() {
        match first_reducer(index, w.letters(), &live) {
            Some((id, p)) => {
                let g = &basis[id];
                let (a, b) = (&w.letters()[..p], &w.letters()[p + g.lm().unwrap().len()..]);
                let q = -&(c / &g.lc());
                let (a, b) = (a.to_vec(), b.to_vec());
                rest = rest.axpy(&q, g, |v| v.sandwich(&a, &b));
            }
            None => done.push(rest.pop_leading().unwrap()),
        }
    }
    Polynomial::from_sorted_unchecked(done)
}

/// Smallest id occurring in `w`, at its leftmost occurrence.
pub(crate) fn first_reducer(index: &LeadIndex, w: &[u16], live: impl Fn(usize) -> bool) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    index.for_each_match(w, 0, w.len(), |id, s| {
        if live(id) && best.is_none_or(|b| (id, s) < b) {
            best = Some((id, s));
        }
    });
    best
}
