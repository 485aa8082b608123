//! Packed vertex sets.
//!
//! A [`Face`] is a subset of a fixed universe `0..n`, stored one bit per
//! vertex in 64-bit words. The free functions in [`bits`] operate on raw word
//! slices and are what the complex and engine code use on their flat row
//! storage.

use std::fmt;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = u64::BITS as usize;

/// Number of words needed to hold `n` bits.
#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

pub(crate) mod bits {
    use super::WORD_BITS;

    #[inline]
    pub fn get(row: &[u64], i: usize) -> bool {
        row[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(row: &mut [u64], i: usize) {
        row[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    #[inline]
    pub fn clear(row: &mut [u64], i: usize) {
        row[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    #[inline]
    pub fn count(row: &[u64]) -> usize {
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_subset(a: &[u64], b: &[u64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x & !y == 0)
    }

    #[inline]
    pub fn is_disjoint(a: &[u64], b: &[u64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x & y == 0)
    }

    #[inline]
    pub fn is_empty(row: &[u64]) -> bool {
        row.iter().all(|&w| w == 0)
    }

    /// Mask with the low `n % 64` bits of the last word set, or all bits if
    /// `n` is a multiple of 64.
    #[inline]
    pub fn tail_mask(n: usize) -> u64 {
        match n % WORD_BITS {
            0 => !0,
            r => (1u64 << r) - 1,
        }
    }

    /// Writes the full set `0..n` into `row`.
    pub fn fill(row: &mut [u64], n: usize) {
        row.fill(!0);
        if let Some(last) = row.last_mut() {
            *last &= tail_mask(n);
        }
    }

    /// Complements `row` in place relative to the universe `0..n`.
    pub fn complement(row: &mut [u64], n: usize) {
        for w in row.iter_mut() {
            *w = !*w;
        }
        if let Some(last) = row.last_mut() {
            *last &= tail_mask(n);
        }
    }

    /// Iterates the set bit positions of `row` in ascending order.
    pub fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let tz = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + tz)
                }
            })
        })
    }

    /// Lowest set bit, if any.
    #[inline]
    pub fn first(row: &[u64]) -> Option<usize> {
        row.iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * WORD_BITS + w.trailing_zeros() as usize)
    }
}

/// A set of vertex indices over a declared universe `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Face {
    universe: usize,
    words: Vec<u64>,
}

impl Face {
    pub fn empty(universe: usize) -> Self {
        Face {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    /// The full vertex set `0..universe`.
    pub fn full(universe: usize) -> Self {
        let mut f = Face::empty(universe);
        bits::fill(&mut f.words, universe);
        f
    }

    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut f = Face::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(Error::VertexOutOfRange { index: i, universe });
            }
            bits::set(&mut f.words, i);
        }
        Ok(f)
    }

    pub(crate) fn from_words(universe: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(universe));
        debug_assert!(words
            .last()
            .is_none_or(|&w| w & !bits::tail_mask(universe) == 0));
        Face { universe, words }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> usize {
        bits::count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        bits::is_empty(&self.words)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && bits::get(&self.words, v)
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.universe {
            return Err(Error::VertexOutOfRange {
                index: v,
                universe: self.universe,
            });
        }
        bits::set(&mut self.words, v);
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            bits::clear(&mut self.words, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits::ones(&self.words)
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.check_universe(other);
        bits::is_subset(&self.words, &other.words)
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.check_universe(other);
        bits::is_disjoint(&self.words, &other.words)
    }

    pub fn union(&self, other: &Face) -> Face {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Face) -> Face {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Face {
        let mut words = self.words.clone();
        bits::complement(&mut words, self.universe);
        Face {
            universe: self.universe,
            words,
        }
    }

    fn zip_with(&self, other: &Face, f: impl Fn(u64, u64) -> u64) -> Face {
        self.check_universe(other);
        Face {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn check_universe(&self, other: &Face) {
        assert_eq!(
            self.universe, other.universe,
            "faces over different universes"
        );
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
