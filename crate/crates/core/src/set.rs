use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ElementId;

const WORD_BITS: usize = 64;

/// A subset of the elements `0..universe` of one lattice, stored as a
/// fixed-width bitset. Which lattice it refers to is a convention of the
/// caller; only index bounds are enforced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let bits = universe - i * WORD_BITS;
            *w = if bits >= WORD_BITS {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        s
    }

    pub fn singleton(universe: usize, element: ElementId) -> Self {
        let mut s = Self::empty(universe);
        s.insert(element);
        s
    }

    pub fn from_elements<I: IntoIterator<Item = ElementId>>(universe: usize, iter: I) -> Self {
        let mut s = Self::empty(universe);
        for e in iter {
            s.insert(e);
        }
        s
    }

    /// Size of the ambient element range, not the member count.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, element: ElementId) {
        assert!(element < self.universe, "element out of range");
        self.words[element / WORD_BITS] |= 1 << (element % WORD_BITS);
    }

    pub fn remove(&mut self, element: ElementId) {
        assert!(element < self.universe, "element out of range");
        self.words[element / WORD_BITS] &= !(1 << (element % WORD_BITS));
    }

    pub fn contains(&self, element: ElementId) -> bool {
        element < self.universe
            && self.words[element / WORD_BITS] & (1 << (element % WORD_BITS)) != 0
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members strictly below `bound`, i.e. the set intersected with `0..bound`.
    pub fn truncated(&self, bound: usize) -> Self {
        let mut s = self.clone();
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            if lo >= bound {
                *w = 0;
            } else if bound - lo < WORD_BITS {
                *w &= (1u64 << (bound - lo)) - 1;
            }
        }
        s
    }

    pub fn min(&self) -> Option<ElementId> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i * WORD_BITS;
            BitIter { word: w }.map(move |b| base + b)
        })
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

// Debug mirrors Display; the word layout is never interesting.
impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn basics() {
        let mut s = ElementSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(65);
        s.insert(3);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 3, 65]);
        assert!(s.contains(65));
        s.remove(65);
        assert!(!s.contains(65));
        assert_eq!(s.min(), Some(0));
    }

    #[test]
    fn full_and_complement() {
        let s = ElementSet::full(67);
        assert_eq!(s.len(), 67);
        assert!(s.is_full());
        assert!(s.complement().is_empty());
        let t = ElementSet::from_elements(67, [1, 66]);
        assert_eq!(t.complement().len(), 65);
    }

    #[test]
    fn truncation() {
        let s = ElementSet::from_elements(130, [0, 5, 63, 64, 100, 129]);
        assert_eq!(s.truncated(64).to_vec(), vec![0, 5, 63]);
        assert_eq!(s.truncated(101).to_vec(), vec![0, 5, 63, 64, 100]);
        assert_eq!(s.truncated(0).len(), 0);
        assert_eq!(s.truncated(130), s);
    }

    #[test]
    fn display() {
        let s = ElementSet::from_elements(8, [1, 4]);
        assert_eq!(format!("{s}"), "{1,4}");
        assert_eq!(format!("{}", ElementSet::empty(8)), "{}");
    }

    fn model(s: &ElementSet) -> BTreeSet<usize> {
        s.iter().collect()
    }

    proptest! {
        #[test]
        fn ops_match_btreeset_model(
            a in prop::collection::btree_set(0usize..100, 0..40),
            b in prop::collection::btree_set(0usize..100, 0..40),
        ) {
            let sa = ElementSet::from_elements(100, a.iter().copied());
            let sb = ElementSet::from_elements(100, b.iter().copied());
            prop_assert_eq!(model(&sa.union(&sb)), a.union(&b).copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(model(&sa.intersection(&sb)), a.intersection(&b).copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(model(&sa.difference(&sb)), a.difference(&b).copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
            prop_assert_eq!(sa.len(), a.len());
        }
    }
}
