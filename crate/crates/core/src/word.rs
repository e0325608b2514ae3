//! Words over a finite alphabet and the deglex order.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Index of an indeterminate. Names live in the I/O layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(pub u16);

/// A monomial of the free monoid, stored as a sequence of variable indices.
///
/// `Ord` is deglex with variable precedence given by index order: length first, then
/// left-to-right comparison of letters.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl Into<Vec<u16>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(v: Variable) -> Self {
        Word(alloc::vec![v.0])
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `a · self · b`
    pub fn sandwich(&self, a: &[u16], b: &[u16]) -> Word {
        let mut v = Vec::with_capacity(a.len() + self.len() + b.len());
        v.extend_from_slice(a);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(b);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn max_letter(&self) -> Option<u16> {
        self.0.iter().copied().max()
    }
}

impl From<&[u16]> for Word {
    fn from(s: &[u16]) -> Self {
        Word(s.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_slices(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &l in &self.0 {
            match l {
                0..=2 => write!(f, "{}", (b"xyz"[l as usize]) as char)?,
                _ => write!(f, "v{l}")?,
            }
        }
        Ok(())
    }
}

/// Deglex on raw letter slices with index precedence.
pub fn cmp_slices(a: &[u16], b: &[u16]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Deglex comparison of two words presented as chained pieces, without allocating.
pub(crate) fn cmp_chained<'a, I, J>(a_len: usize, a: I, b_len: usize, b: J) -> Ordering
where
    I: Iterator<Item = &'a u16>,
    J: Iterator<Item = &'a u16>,
{
    a_len.cmp(&b_len).then_with(|| a.cmp(b))
}

/// Deglex under an explicit precedence: `rank[v]` is the position of variable `v` in
/// ascending order.
pub fn cmp_deglex(w1: &Word, w2: &Word, rank: &[u16]) -> Ordering {
    w1.len()
        .cmp(&w2.len())
        .then_with(|| w1.0.iter().map(|&l| rank[l as usize]).cmp(w2.0.iter().map(|&l| rank[l as usize])))
}

/// A total, well-founded monomial order compatible with multiplication.
pub trait MonomialOrder {
    fn cmp_words(&self, a: &Word, b: &Word) -> Ordering;
}

/// Deglex with an optional precedence table; `None` means index order.
#[derive(Clone, Debug, Default)]
pub struct Deglex {
    rank: Option<Vec<u16>>,
}

impl Deglex {
    pub fn with_precedence(ascending: &[u16]) -> Self {
        let n = ascending.iter().map(|&v| v as usize + 1).max().unwrap_or(0);
        let mut rank = alloc::vec![0u16; n];
        for (r, &v) in ascending.iter().enumerate() {
            rank[v as usize] = r as u16;
        }
        Deglex { rank: Some(rank) }
    }
}

impl MonomialOrder for Deglex {
    fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        match &self.rank {
            None => a.cmp(b),
            Some(rank) => cmp_deglex(a, b, rank),
        }
    }
}

/// All `(a, b)` with `w = a·u·b`, by increasing `|a|`. `u` must be nonempty.
pub fn factor_occurrences(w: &Word, u: &Word) -> Vec<(Word, Word)> {
    occurrence_positions(w.letters(), u.letters()).map(|p| (w.subword(0, p), w.subword(p + u.len(), w.len()))).collect()
}

/// Start positions of `u` inside `w`, ascending. The empty word occurs everywhere.
pub fn occurrence_positions<'a>(w: &'a [u16], u: &'a [u16]) -> impl Iterator<Item = usize> + 'a {
    let n = (w.len() + 1).saturating_sub(u.len());
    (0..n).filter(move |&p| &w[p..p + u.len()] == u)
}
