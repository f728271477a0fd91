//! Fixed-width bit-vector subsets of the state space.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

const BITS: usize = 64;

/// A subset of `[0, n)` stored as a bit vector.
///
/// The cardinality is cached and kept in sync by every mutating method.
/// Equality and hashing only look at the bound `n` and the member bits.
#[derive(Clone)]
pub struct StateSet {
    n: usize,
    blocks: Vec<u64>,
    len: usize,
}

impl StateSet {
    pub fn empty(n: usize) -> Self {
        StateSet {
            n,
            blocks: vec![0; n.div_ceil(BITS)],
            len: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for (i, block) in set.blocks.iter_mut().enumerate() {
            let lo = i * BITS;
            let width = (n - lo).min(BITS);
            *block = if width == BITS {
                u64::MAX
            } else {
                (1u64 << width) - 1
            };
        }
        set.len = n;
        set
    }

    pub fn singleton(n: usize, q: usize) -> Result<Self> {
        Self::from_states(n, [q])
    }

    /// Builds a set from state indices; duplicates are allowed.
    pub fn from_states<I: IntoIterator<Item = usize>>(n: usize, states: I) -> Result<Self> {
        let mut set = Self::empty(n);
        for q in states {
            if q >= n {
                return Err(Error::StateOutOfRange {
                    state: q,
                    states: n,
                });
            }
            set.insert(q);
        }
        Ok(set)
    }

    /// Low `n` bits of `mask`; only meaningful for `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= BITS, "from_mask needs n <= 64");
        let mut set = Self::empty(n);
        if n > 0 {
            let keep = if n == BITS { u64::MAX } else { (1u64 << n) - 1 };
            set.blocks[0] = mask & keep;
        }
        set.recount();
        set
    }

    /// The set as a 64-bit mask; `None` when `n > 64`.
    pub fn to_mask(&self) -> Option<u64> {
        match self.blocks.len() {
            0 => Some(0),
            1 => Some(self.blocks[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.n
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.n && self.blocks[q / BITS] >> (q % BITS) & 1 == 1
    }

    /// Returns whether `q` was newly added.
    ///
    /// # Panics
    /// If `q` is outside the universe.
    pub fn insert(&mut self, q: usize) -> bool {
        assert!(q < self.n, "state {q} outside universe of {}", self.n);
        let bit = 1u64 << (q % BITS);
        let block = &mut self.blocks[q / BITS];
        let fresh = *block & bit == 0;
        *block |= bit;
        self.len += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, q: usize) -> bool {
        if q >= self.n {
            return false;
        }
        let bit = 1u64 << (q % BITS);
        let block = &mut self.blocks[q / BITS];
        let present = *block & bit != 0;
        *block &= !bit;
        self.len -= present as usize;
        present
    }

    pub fn clear(&mut self) {
        self.blocks.iter_mut().for_each(|b| *b = 0);
        self.len = 0;
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            blocks: &self.blocks,
            index: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_same(&self, other: &StateSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &StateSet, f: impl Fn(u64, u64) -> u64) -> Result<StateSet> {
        self.check_same(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| f(a, b))
            .collect();
        let mut set = StateSet {
            n: self.n,
            blocks,
            len: 0,
        };
        set.recount();
        Ok(set)
    }

    pub fn union(&self, other: &StateSet) -> Result<StateSet> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &StateSet) -> Result<StateSet> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &StateSet) -> Result<StateSet> {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> StateSet {
        let full = StateSet::full(self.n);
        full.difference(self).expect("same universe")
    }

    pub fn is_subset(&self, other: &StateSet) -> Result<bool> {
        self.check_same(other)?;
        Ok(self
            .blocks
            .iter()
            .zip(&other.blocks)
            .all(|(&a, &b)| a & !b == 0))
    }

    pub fn is_disjoint(&self, other: &StateSet) -> Result<bool> {
        self.check_same(other)?;
        Ok(self
            .blocks
            .iter()
            .zip(&other.blocks)
            .all(|(&a, &b)| a & b == 0))
    }

    fn recount(&mut self) {
        self.len = self.blocks.iter().map(|b| b.count_ones() as usize).sum();
    }
}

impl PartialEq for StateSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.blocks == other.blocks
    }
}

impl Eq for StateSet {}

impl Hash for StateSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.blocks.hash(state);
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over members.
pub struct Iter<'a> {
    blocks: &'a [u64],
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
                return Some(self.index * BITS + bit);
            }
            self.index += 1;
            self.current = *self.blocks.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a StateSet {
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
    fn full_and_empty() {
        for n in [1, 5, 63, 64, 65, 130] {
            let full = StateSet::full(n);
            assert_eq!(full.len(), n);
            assert_eq!(full.iter().count(), n);
            assert!(full.complement().is_empty());
            assert_eq!(StateSet::empty(n).complement(), full);
        }
    }

    #[test]
    fn out_of_range_member_is_rejected() {
        assert_eq!(
            StateSet::from_states(3, [0, 3]),
            Err(Error::StateOutOfRange {
                state: 3,
                states: 3
            })
        );
    }

    #[test]
    fn mismatched_universe_is_an_error() {
        let a = StateSet::full(3);
        let b = StateSet::full(4);
        assert!(matches!(a.union(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.is_subset(&b).is_err());
    }

    #[test]
    fn mask_round_trip() {
        let s = StateSet::from_mask(5, 0b1_0110 | 1 << 9);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(s.to_mask(), Some(0b1_0110));
    }

    proptest! {
        #[test]
        fn cached_len_matches_members(n in 1usize..150, ops in prop::collection::vec((any::<bool>(), 0usize..150), 0..60)) {
            let mut set = StateSet::empty(n);
            let mut reference = std::collections::BTreeSet::new();
            for (add, q) in ops {
                let q = q % n;
                if add {
                    set.insert(q);
                    reference.insert(q);
                } else {
                    set.remove(q);
                    reference.remove(&q);
                }
                prop_assert_eq!(set.len(), reference.len());
            }
            prop_assert_eq!(set.iter().collect::<Vec<_>>(), reference.into_iter().collect::<Vec<_>>());
        }
    }
}
