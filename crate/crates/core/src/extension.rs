//! Semantics identifiers and canonical families of extensions.

use std::fmt;
use std::str::FromStr;

use crate::argset::ArgSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsId {
    ConflictFree,
    Admissible,
    Stable,
    Complete,
    Preferred,
    Grounded,
    Ideal,
    SemiStable,
    Eager,
}

impl SemanticsId {
    pub const ALL: [SemanticsId; 9] = [
        SemanticsId::ConflictFree,
        SemanticsId::Admissible,
        SemanticsId::Stable,
        SemanticsId::Complete,
        SemanticsId::Preferred,
        SemanticsId::Grounded,
        SemanticsId::Ideal,
        SemanticsId::SemiStable,
        SemanticsId::Eager,
    ];

    /// The short code used on the command line, e.g. `ST`.
    pub fn code(self) -> &'static str {
        match self {
            SemanticsId::ConflictFree => "CF",
            SemanticsId::Admissible => "AD",
            SemanticsId::Stable => "ST",
            SemanticsId::Complete => "CO",
            SemanticsId::Preferred => "PR",
            SemanticsId::Grounded => "GR",
            SemanticsId::Ideal => "ID",
            SemanticsId::SemiStable => "SST",
            SemanticsId::Eager => "EAG",
        }
    }

    /// Semantics decided set-by-set, as opposed to by selecting from a family.
    pub fn is_per_set(self) -> bool {
        matches!(
            self,
            SemanticsId::ConflictFree
                | SemanticsId::Admissible
                | SemanticsId::Stable
                | SemanticsId::Complete
        )
    }
}

impl fmt::Display for SemanticsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for SemanticsId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SemanticsId::ALL
            .into_iter()
            .find(|sem| sem.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown semantics `{s}`"))
    }
}

/// A family of extensions over `n` arguments, kept sorted by cardinality and
/// then lexicographically, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSet {
    dimension: usize,
    extensions: Vec<ArgSet>,
}

impl ExtensionSet {
    pub fn new(dimension: usize, mut extensions: Vec<ArgSet>) -> Self {
        debug_assert!(extensions.iter().all(|s| s.universe_size() == dimension));
        extensions.sort();
        extensions.dedup();
        ExtensionSet {
            dimension,
            extensions,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ArgSet> {
        self.extensions.iter()
    }

    pub fn as_slice(&self) -> &[ArgSet] {
        &self.extensions
    }

    pub fn contains(&self, s: &ArgSet) -> bool {
        self.extensions.binary_search(s).is_ok()
    }

    /// True when every member of `self` is a member of `other`.
    pub fn is_subfamily_of(&self, other: &ExtensionSet) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// Intersection of all members; the full set for an empty family.
    pub fn intersection(&self) -> ArgSet {
        self.iter()
            .fold(ArgSet::full(self.dimension), |acc, s| acc.intersection(s))
    }

    /// Index lists of every member, in canonical order.
    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.iter().map(ArgSet::to_vec).collect()
    }
}

impl<'a> IntoIterator for &'a ExtensionSet {
    type Item = &'a ArgSet;
    type IntoIter = std::slice::Iter<'a, ArgSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// The `⊆`-maximal members of `sets`.
pub(crate) fn maximal_sets(sets: &[ArgSet]) -> Vec<ArgSet> {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect()
}

/// The `⊆`-minimal members of `sets`.
pub(crate) fn minimal_sets(sets: &[ArgSet]) -> Vec<ArgSet> {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t != *s && t.is_subset(s)))
        .cloned()
        .collect()
}
