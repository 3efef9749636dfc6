//! Fixed-width bitsets used for subgroup membership and node sets.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A set of small non-negative integers, stored as packed `u64` words.
///
/// Two sets of different capacity never compare equal; every set in this
/// crate is sized by its owning group or lattice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    capacity: usize,
}

impl BitSet {
    pub fn new(capacity: usize) -> Self {
        BitSet {
            words: vec![0; capacity.div_ceil(WORD)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = BitSet::new(capacity);
        for i in 0..capacity {
            set.insert(i);
        }
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(capacity: usize, indices: I) -> Self {
        let mut set = BitSet::new(capacity);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Returns `true` if the bit was newly set.
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.capacity, "bit {i} out of range {}", self.capacity);
        let (w, b) = (i / WORD, i % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.capacity {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.capacity && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            capacity: self.capacity,
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
            capacity: self.capacity,
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares the ascending member lists lexicographically.
    pub fn cmp_members(&self, other: &BitSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
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

impl<'a> IntoIterator for &'a BitSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn first_last_and_iteration() {
        let s = BitSet::from_indices(200, [3, 64, 65, 199]);
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(199));
        assert_eq!(s.to_vec(), vec![3, 64, 65, 199]);
        assert_eq!(s.len(), 4);
        assert!(BitSet::new(10).first().is_none());
        assert!(BitSet::new(0).iter().next().is_none());
    }

    #[test]
    fn member_order_is_lexicographic_on_sorted_lists() {
        let a = BitSet::from_indices(100, [0, 5]);
        let b = BitSet::from_indices(100, [0, 70]);
        let c = BitSet::from_indices(100, [1]);
        assert_eq!(a.cmp_members(&b), Ordering::Less);
        assert_eq!(b.cmp_members(&c), Ordering::Less);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_vec_model(
            xs in proptest::collection::btree_set(0usize..150, 0..40),
            ys in proptest::collection::btree_set(0usize..150, 0..40),
        ) {
            let a = BitSet::from_indices(150, xs.iter().copied());
            let b = BitSet::from_indices(150, ys.iter().copied());
            let inter: Vec<usize> = xs.intersection(&ys).copied().collect();
            let uni: Vec<usize> = xs.union(&ys).copied().collect();
            prop_assert_eq!(a.intersection(&b).to_vec(), inter);
            prop_assert_eq!(a.union(&b).to_vec(), uni);
            prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
            let xv: Vec<usize> = xs.iter().copied().collect();
            let yv: Vec<usize> = ys.iter().copied().collect();
            prop_assert_eq!(a.cmp_members(&b), xv.cmp(&yv));
        }
    }
}
