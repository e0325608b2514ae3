//! The free bimodule over the free algebra: module monomials `a·e_i·b`, module
//! elements, the TOP order and evaluation onto the ideal.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::coeff::Coefficient;
use crate::error::Error;
use crate::lincomb::LinComb;
use crate::poly::Polynomial;
use crate::word::{cmp_chained, cmp_slices, Word};

/// `left · e_index · right`. The index is 0-based.
///
/// `Ord` is term-over-position on top of deglex: first the concatenation
/// `left·right`, then `left`, then the index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub left: Word,
    pub index: usize,
    pub right: Word,
}

impl ModuleMonomial {
    pub fn new(left: Word, index: usize, right: Word) -> Self {
        ModuleMonomial { left, index, right }
    }

    pub fn unit(index: usize) -> Self {
        ModuleMonomial { left: Word::empty(), index, right: Word::empty() }
    }

    /// `a · self · b`
    pub fn sandwich(&self, a: &[u16], b: &[u16]) -> Self {
        ModuleMonomial {
            left: Word::from_letters([a, self.left.letters()].concat()),
            index: self.index,
            right: Word::from_letters([self.right.letters(), b].concat()),
        }
    }

    /// `left·right`, the word that decides the first TOP comparison.
    pub fn flat(&self) -> Word {
        self.left.concat(&self.right)
    }

    /// Total length of the surrounding words.
    pub fn outer_len(&self) -> usize {
        self.left.len() + self.right.len()
    }
}

/// TOP comparison of `a·mu·b` against `sigma` without building `a·mu·b`.
pub fn cmp_shifted(a: &[u16], mu: &ModuleMonomial, b: &[u16], sigma: &ModuleMonomial) -> Ordering {
    let l1 = a.len() + mu.outer_len() + b.len();
    let flat1 = a.iter().chain(mu.left.letters()).chain(mu.right.letters()).chain(b);
    let flat2 = sigma.left.letters().iter().chain(sigma.right.letters());
    cmp_chained(l1, flat1, sigma.outer_len(), flat2)
        .then_with(|| {
            cmp_chained(
                a.len() + mu.left.len(),
                a.iter().chain(mu.left.letters()),
                sigma.left.len(),
                sigma.left.letters().iter(),
            )
        })
        .then_with(|| mu.index.cmp(&sigma.index))
}

/// Whether `a·mu·b == sigma`.
pub fn is_shifted(a: &[u16], mu: &ModuleMonomial, b: &[u16], sigma: &ModuleMonomial) -> bool {
    mu.index == sigma.index
        && sigma.left.len() == a.len() + mu.left.len()
        && sigma.right.len() == mu.right.len() + b.len()
        && &sigma.left.letters()[..a.len()] == a
        && &sigma.left.letters()[a.len()..] == mu.left.letters()
        && &sigma.right.letters()[..mu.right.len()] == mu.right.letters()
        && &sigma.right.letters()[mu.right.len()..] == b
}

impl Ord for ModuleMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_shifted(&[], self, &[], other)
    }
}

impl PartialOrd for ModuleMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ModuleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.left.is_empty() {
            write!(f, "{:?}", self.left)?;
        }
        write!(f, "e{}", self.index + 1)?;
        if !self.right.is_empty() {
            write!(f, "{:?}", self.right)?;
        }
        Ok(())
    }
}

/// A total order on module monomials.
pub trait ModuleOrder {
    fn cmp_monomials(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering;
}

/// Term over position. Fair, and the order used everywhere in the engine.
#[derive(Clone, Copy, Debug, Default)]
pub struct Top;

impl ModuleOrder for Top {
    fn cmp_monomials(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        a.cmp(b)
    }
}

/// Position over term. Not fair; kept for negative tests only.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pot;

impl ModuleOrder for Pot {
    fn cmp_monomials(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        a.index
            .cmp(&b.index)
            .then_with(|| cmp_slices(a.flat().letters(), b.flat().letters()))
            .then_with(|| a.left.cmp(&b.left))
    }
}

/// Witness `(a, b)` with `sigma = a·mu·b`, if one exists. It is unique.
pub fn mod_divides(mu: &ModuleMonomial, sigma: &ModuleMonomial) -> Option<(Word, Word)> {
    if mu.index != sigma.index
        || !sigma.left.letters().ends_with(mu.left.letters())
        || !sigma.right.letters().starts_with(mu.right.letters())
    {
        return None;
    }
    let a = sigma.left.subword(0, sigma.left.len() - mu.left.len());
    let b = sigma.right.subword(mu.right.len(), sigma.right.len());
    Some((a, b))
}

pub(crate) fn divides(mu: &ModuleMonomial, sigma: &ModuleMonomial) -> bool {
    mu.index == sigma.index
        && sigma.left.letters().ends_with(mu.left.letters())
        && sigma.right.letters().starts_with(mu.right.letters())
}

/// Element of the free bimodule of rank `r`.
pub type ModuleElement = LinComb<ModuleMonomial>;

impl LinComb<ModuleMonomial> {
    pub fn generator(index: usize) -> Self {
        Self::monomial(ModuleMonomial::unit(index), Coefficient::one())
    }

    pub fn signature(&self) -> Result<&ModuleMonomial, Error> {
        self.leading().map(|t| &t.0).ok_or(Error::ZeroSignature)
    }

    /// Signature coefficient, `0` for the zero element.
    pub fn sig_coeff(&self) -> Coefficient {
        self.leading().map(|t| t.1.clone()).unwrap_or_default()
    }

    /// Signature term, `None` for the zero element.
    pub fn sig_term(&self) -> Option<(Coefficient, ModuleMonomial)> {
        self.leading().map(|(m, c)| (c.clone(), m.clone()))
    }

    /// `a · self · b`
    pub fn sandwich(&self, a: &[u16], b: &[u16]) -> Self {
        if a.is_empty() && b.is_empty() {
            return self.clone();
        }
        self.map_monotone(|m| m.sandwich(a, b))
    }

    /// `self · p`
    pub fn mul_poly_right(&self, p: &Polynomial) -> Self {
        let mut terms = Vec::with_capacity(self.len() * p.len());
        for (m, c) in self.iter() {
            for (w, d) in p.iter() {
                terms.push((m.sandwich(&[], w.letters()), c * d));
            }
        }
        Self::from_terms(terms)
    }

    /// `p · self`
    pub fn mul_poly_left(&self, p: &Polynomial) -> Self {
        let mut terms = Vec::with_capacity(self.len() * p.len());
        for (w, d) in p.iter() {
            for (m, c) in self.iter() {
                terms.push((m.sandwich(w.letters(), &[]), c * d));
            }
        }
        Self::from_terms(terms)
    }

    /// Image under `e_i -> f_i`.
    pub fn evaluate(&self, gens: &[Polynomial]) -> Result<Polynomial, Error> {
        let mut terms = Vec::new();
        for (m, c) in self.iter() {
            let f = gens.get(m.index).ok_or(Error::IndexOutOfRange { index: m.index, count: gens.len() })?;
            for (w, d) in f.iter() {
                terms.push((w.sandwich(m.left.letters(), m.right.letters()), c * d));
            }
        }
        Ok(Polynomial::from_terms(terms))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.iter().map(|t| t.0.index).max()
    }
}

impl fmt::Debug for LinComb<ModuleMonomial> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{m:?}")?;
        }
        Ok(())
    }
}
