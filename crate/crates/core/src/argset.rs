//! Subsets of a framework's arguments.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset `S` of the arguments `0..n`, stored as a bit vector.
///
/// Iteration always yields members in increasing index order, which is the
/// `i_1 < i_2 < ... < i_k` convention used by every block extraction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgSet {
    bits: FixedBitSet,
}

impl ArgSet {
    pub fn empty(universe_size: usize) -> Self {
        ArgSet {
            bits: FixedBitSet::with_capacity(universe_size),
        }
    }

    pub fn full(universe_size: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe_size);
        bits.insert_range(..);
        ArgSet { bits }
    }

    pub fn from_indices<I>(universe_size: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = ArgSet::empty(universe_size);
        for i in indices {
            if i >= universe_size {
                return Err(Error::DimensionMismatch(format!(
                    "index {i} outside universe of size {universe_size}"
                )));
            }
            set.bits.insert(i);
        }
        Ok(set)
    }

    /// Builds a set from the low `universe_size` bits of `mask`.
    pub fn from_mask(universe_size: usize, mask: u64) -> Self {
        debug_assert!(universe_size <= 64);
        let mut set = ArgSet::empty(universe_size);
        for i in 0..universe_size {
            if mask >> i & 1 == 1 {
                set.bits.insert(i);
            }
        }
        set
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        ArgSet { bits }
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn universe_size(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    /// Panics if `i` is outside the universe.
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe_size(), "index {i} outside universe");
        self.bits.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.bits.set(i, false);
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `A \ S`.
    pub fn complement(&self) -> ArgSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ArgSet { bits }
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ArgSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &ArgSet) -> ArgSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ArgSet { bits }
    }

    pub fn intersection(&self, other: &ArgSet) -> ArgSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ArgSet { bits }
    }

    /// Canonical order: by cardinality, then lexicographically by the
    /// increasing index list.
    pub fn canonical_cmp(&self, other: &ArgSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
            .then_with(|| self.universe_size().cmp(&other.universe_size()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_and_membership() {
        let s = ArgSet::from_indices(5, [0, 2, 4]).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.complement().to_vec(), vec![1, 3]);
        assert!(s.complement().is_disjoint(&s));
        assert_eq!(ArgSet::full(0).len(), 0);
        assert_eq!(ArgSet::empty(3).complement(), ArgSet::full(3));
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        assert!(matches!(
            ArgSet::from_indices(2, [2]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v: Vec<ArgSet> = [vec![1, 2], vec![0], vec![], vec![0, 3], vec![2]]
            .into_iter()
            .map(|ix| ArgSet::from_indices(4, ix).unwrap())
            .collect();
        v.sort();
        let lists: Vec<Vec<usize>> = v.iter().map(ArgSet::to_vec).collect();
        assert_eq!(
            lists,
            vec![vec![], vec![0], vec![2], vec![0, 3], vec![1, 2]]
        );
    }

    #[test]
    fn mask_round_trip() {
        let s = ArgSet::from_mask(6, 0b101001);
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
    }
}
