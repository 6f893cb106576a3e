//! Word-packed vertex sets over a fixed universe `{0, …, n-1}`.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// A subset of the vertices of one particular graph.
///
/// Every set remembers the size of its universe so that mixing sets across
/// graphs of different order is caught early.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in 0..s.words.len() {
            s.words[w] = !0;
        }
        s.trim();
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Result<Self> {
        let mut s = Self::empty(universe);
        s.try_insert(v)?;
        Ok(s)
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Result<Self> {
        let mut s = Self::empty(universe);
        for v in members {
            s.try_insert(v)?;
        }
        Ok(s)
    }

    /// Clears bits beyond the universe after whole-word operations.
    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.universe;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !0 >> extra;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn try_insert(&mut self, v: usize) -> Result<()> {
        if v >= self.universe {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.universe,
            });
        }
        self.words[v / 64] |= 1 << (v % 64);
        Ok(())
    }

    /// Inserts a vertex known to be in range.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn smallest(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        VertexSet { universe: self.universe, words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        VertexSet { universe: self.universe, words }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        VertexSet { universe: self.universe, words }
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    pub(crate) fn from_words(universe: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(universe));
        let mut s = VertexSet { universe, words };
        s.trim();
        s
    }
}

/// Lexicographic order on the sorted member lists; used for witness
/// tie-breaking.
impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_query_iterate() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(65);
        s.insert(13);
        assert!(s.contains(65));
        assert!(!s.contains(64));
        assert_eq!(s.to_vec(), vec![0, 13, 65]);
        assert_eq!(s.len(), 3);
        s.remove(13);
        assert_eq!(s.to_vec(), vec![0, 65]);
    }

    #[test]
    fn complement_respects_universe() {
        let s = VertexSet::from_members(5, [0, 2]).unwrap();
        assert_eq!(s.complement().to_vec(), vec![1, 3, 4]);
        assert_eq!(VertexSet::full(5).len(), 5);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(VertexSet::from_members(3, [3]).is_err());
    }

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from_members(6, [0, 2]).unwrap();
        let b = VertexSet::from_members(6, [0, 3]).unwrap();
        let c = VertexSet::from_members(6, [1]).unwrap();
        assert!(a < b);
        assert!(b < c);
    }
}
