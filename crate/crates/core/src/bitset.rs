//! Dense subsets of a finite carrier, packed one bit per element.

use std::fmt;

const WORD: usize = 64;

/// A subset of `0..universe`, stored as packed `u64` words.
///
/// Bits at positions `>= universe` are always zero, so derived `Eq`/`Hash`
/// compare sets, not storage.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = ElementSet {
            universe,
            words: vec![!0; universe.div_ceil(WORD)],
        };
        s.trim();
        s
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(x);
        s
    }

    pub fn from_iter_in(universe: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for x in items {
            s.insert(x);
        }
        s
    }

    /// Builds a set from the low `universe` bits of `mask` (universe <= 64).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD);
        let mut s = Self::empty(universe);
        if universe > 0 {
            s.words[0] = mask;
            s.trim();
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(
            x < self.universe,
            "element {x} outside universe {}",
            self.universe
        );
        self.words[x / WORD] |= 1 << (x % WORD);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < self.universe {
            self.words[x / WORD] &= !(1 << (x % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn difference_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> ElementSet {
        let mut s = ElementSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Smallest member of `self \ other`.
    pub fn first_not_in(&self, other: &ElementSet) -> Option<usize> {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| *a & !*b != 0)
            .map(|(i, (a, b))| i * WORD + (a & !b).trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Applies `f` to every member (used for involution images).
    pub fn map(&self, f: impl Fn(usize) -> usize) -> ElementSet {
        Self::from_iter_in(self.universe, self.iter().map(f))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
