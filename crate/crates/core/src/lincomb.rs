//! Sparse linear combinations kept sorted by descending key.
//!
//! Shared by polynomials (keys are words) and bimodule elements (keys are module
//! monomials).

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::coeff::Coefficient;

/// Terms in strictly descending key order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K> {
    terms: Vec<(K, Coefficient)>,
}

impl<K> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: Vec::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(k: K, c: Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: alloc::vec![(k, c)] }
    }

    /// Builds from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(mut terms: Vec<(K, Coefficient)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(K, Coefficient)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = &*lc + &c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((k, c));
                }
            }
        }
        if matches!(out.last(), Some((_, c)) if c.is_zero()) {
            out.pop();
        }
        LinComb { terms: out }
    }

    /// Trusts the caller that `terms` are strictly descending and nonzero.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(K, Coefficient)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        LinComb { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(K, Coefficient)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(K, Coefficient)> {
        self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = &(K, Coefficient)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<&(K, Coefficient)> {
        self.terms.first()
    }

    pub fn coeff(&self, k: &K) -> Coefficient {
        match self.terms.binary_search_by(|(t, _)| k.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coefficient::zero(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LinComb { terms: self.terms.iter().map(|(k, d)| (k.clone(), d * c)).collect() }
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(k, d)| (k.clone(), -d)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&Coefficient::one(), other, |k| k.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&-Coefficient::one(), other, |k| k.clone())
    }

    /// `self + c · map(other)` where `map` is strictly order preserving.
    pub fn axpy(&self, c: &Coefficient, other: &Self, map: impl Fn(&K) -> K) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = self.terms.iter().peekable();
        let mut j = other.terms.iter().map(|(k, d)| (map(k), d)).peekable();
        loop {
            let ord = match (i.peek(), j.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => a.0.cmp(&b.0),
            };
            match ord {
                Ordering::Greater => out.push(i.next().unwrap().clone()),
                Ordering::Less => {
                    let (k, d) = j.next().unwrap();
                    out.push((k, d * c));
                }
                Ordering::Equal => {
                    let (k, a) = i.next().unwrap();
                    let (_, b) = j.next().unwrap();
                    let s = a + &(b * c);
                    if !s.is_zero() {
                        out.push((k.clone(), s));
                    }
                }
            }
        }
        LinComb { terms: out }
    }

    /// Applies a strictly order preserving key map.
    pub fn map_monotone(&self, map: impl Fn(&K) -> K) -> Self {
        LinComb::from_sorted_unchecked(self.terms.iter().map(|(k, d)| (map(k), d.clone())).collect())
    }

    /// Drops the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(K, Coefficient)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }
}
