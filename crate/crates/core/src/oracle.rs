//! Brute-force reference semantics.
//!
//! Everything here is a direct quantifier translation over the attack
//! relation of an [`ArgumentationFramework`]. No attack matrix or block is
//! ever built, and nothing is pruned, so agreement with [`crate::semantics`]
//! is independent evidence rather than a restatement.

use crate::af::ArgumentationFramework;
use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::extension::{ExtensionSet, SemanticsId};

/// Largest framework the oracle will enumerate.
pub const ORACLE_LIMIT: usize = 20;

/// Some member of `s` attacks `a`.
pub fn defeats(af: &ArgumentationFramework, s: &ArgSet, a: usize) -> bool {
    af.attacks().any(|(b, target)| target == a && s.contains(b))
}

/// Every attacker of `a` is defeated by `s`.
pub fn defends(af: &ArgumentationFramework, s: &ArgSet, a: usize) -> bool {
    af.attacks()
        .filter(|&(_, target)| target == a)
        .all(|(b, _)| defeats(af, s, b))
}

pub fn conflict_free(af: &ArgumentationFramework, s: &ArgSet) -> bool {
    !af.attacks().any(|(a, b)| s.contains(a) && s.contains(b))
}

pub fn admissible(af: &ArgumentationFramework, s: &ArgSet) -> bool {
    conflict_free(af, s) && s.iter().all(|a| defends(af, s, a))
}

pub fn stable(af: &ArgumentationFramework, s: &ArgSet) -> bool {
    conflict_free(af, s)
        && (0..af.len())
            .filter(|&a| !s.contains(a))
            .all(|a| defeats(af, s, a))
}

pub fn complete(af: &ArgumentationFramework, s: &ArgSet) -> bool {
    admissible(af, s)
        && (0..af.len())
            .filter(|&a| defends(af, s, a))
            .all(|a| s.contains(a))
}

/// `S ∪ S⁺`: the set together with everything it attacks.
pub fn range(af: &ArgumentationFramework, s: &ArgSet) -> ArgSet {
    let mut out = s.clone();
    for (a, b) in af.attacks() {
        if s.contains(a) {
            out.insert(b);
        }
    }
    out
}

fn strict_subset(a: &ArgSet, b: &ArgSet) -> bool {
    a != b && a.is_subset(b)
}

/// Membership of `s` in `sem(F)`.
///
/// Per-set semantics are decided directly; the selection semantics are
/// answered by membership in [`oracle_enumerate`].
pub fn oracle_is(af: &ArgumentationFramework, s: &ArgSet, sem: SemanticsId) -> Result<bool> {
    Ok(match sem {
        SemanticsId::ConflictFree => conflict_free(af, s),
        SemanticsId::Admissible => admissible(af, s),
        SemanticsId::Stable => stable(af, s),
        SemanticsId::Complete => complete(af, s),
        _ => oracle_enumerate(af, sem)?.contains(s),
    })
}

/// Every subset of the arguments, in mask order.
fn all_subsets(n: usize) -> Vec<ArgSet> {
    (0..1u64 << n)
        .map(|mask| ArgSet::from_mask(n, mask))
        .collect()
}

fn filter_all(
    af: &ArgumentationFramework,
    pred: fn(&ArgumentationFramework, &ArgSet) -> bool,
) -> Vec<ArgSet> {
    all_subsets(af.len())
        .into_iter()
        .filter(|s| pred(af, s))
        .collect()
}

/// `S` admissible, `S ⊆ bound`, and no admissible `U ⊆ bound` strictly
/// contains `S`.
fn maximal_admissible_within(adm: &[ArgSet], bound: &ArgSet) -> Vec<ArgSet> {
    let inside: Vec<&ArgSet> = adm.iter().filter(|u| u.is_subset(bound)).collect();
    inside
        .iter()
        .filter(|s| !inside.iter().any(|u| strict_subset(s, u)))
        .map(|s| (*s).clone())
        .collect()
}

fn intersect_all(n: usize, family: &[ArgSet]) -> ArgSet {
    let mut out = ArgSet::full(n);
    for t in family {
        out = out.intersection(t);
    }
    out
}

/// Exhaustive enumeration over all `2^n` subsets.
pub fn oracle_enumerate(af: &ArgumentationFramework, sem: SemanticsId) -> Result<ExtensionSet> {
    let n = af.len();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleLimitExceeded {
            n,
            limit: ORACLE_LIMIT,
        });
    }
    let members = match sem {
        SemanticsId::ConflictFree => filter_all(af, conflict_free),
        SemanticsId::Admissible => filter_all(af, admissible),
        SemanticsId::Stable => filter_all(af, stable),
        SemanticsId::Complete => filter_all(af, complete),
        SemanticsId::Preferred => {
            let adm = filter_all(af, admissible);
            adm.iter()
                .filter(|s| !adm.iter().any(|t| strict_subset(s, t)))
                .cloned()
                .collect()
        }
        SemanticsId::Grounded => {
            let co = filter_all(af, complete);
            co.iter()
                .filter(|s| !co.iter().any(|t| strict_subset(t, s)))
                .cloned()
                .collect()
        }
        SemanticsId::Ideal => {
            let adm = filter_all(af, admissible);
            let preferred = oracle_enumerate(af, SemanticsId::Preferred)?;
            let bound = intersect_all(n, preferred.as_slice());
            maximal_admissible_within(&adm, &bound)
        }
        SemanticsId::SemiStable => {
            let adm = filter_all(af, admissible);
            let ranges: Vec<ArgSet> = adm.iter().map(|s| range(af, s)).collect();
            adm.iter()
                .zip(&ranges)
                .filter(|(_, rs)| !ranges.iter().any(|rt| strict_subset(rs, rt)))
                .map(|(s, _)| s.clone())
                .collect()
        }
        SemanticsId::Eager => {
            let adm = filter_all(af, admissible);
            let semi = oracle_enumerate(af, SemanticsId::SemiStable)?;
            let bound = intersect_all(n, semi.as_slice());
            maximal_admissible_within(&adm, &bound)
        }
    };
    Ok(ExtensionSet::new(n, members))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn af(n: usize, pairs: &[(usize, usize)]) -> ArgumentationFramework {
        ArgumentationFramework::from_index_pairs(n, pairs.iter().map(|&(a, b)| (a - 1, b - 1)))
            .unwrap()
    }

    fn set(n: usize, one_based: &[usize]) -> ArgSet {
        ArgSet::from_indices(n, one_based.iter().map(|i| i - 1)).unwrap()
    }

    fn lists(fam: &ExtensionSet) -> Vec<Vec<usize>> {
        fam.iter()
            .map(|s| s.iter().map(|i| i + 1).collect())
            .collect()
    }

    fn ex8() -> ArgumentationFramework {
        af(5, &[(1, 2), (2, 3), (2, 5), (4, 3), (5, 4)])
    }

    fn ex17() -> ArgumentationFramework {
        af(5, &[(1, 2), (2, 3), (2, 4), (2, 5), (4, 3), (5, 4)])
    }

    #[test]
    fn defeats_examples() {
        let f = ex8();
        assert!(defeats(&f, &set(5, &[1, 3, 5]), 1));
        assert!(!defeats(&f, &ArgSet::empty(5), 2));
        assert!(defeats(&f, &set(5, &[1, 3, 5]), 3));
    }

    #[test]
    fn defends_examples() {
        assert!(defends(&ex8(), &set(5, &[1, 5]), 2));
        assert!(!defends(&ex17(), &set(5, &[1, 3, 5]), 1));
        assert!(defends(&ex8(), &ArgSet::empty(5), 0));
    }

    #[test]
    fn oracle_is_examples() {
        assert_eq!(
            oracle_is(&ex8(), &set(5, &[1, 3, 5]), SemanticsId::Stable),
            Ok(true)
        );
        assert_eq!(
            oracle_is(&ex8(), &set(5, &[1, 3, 5]), SemanticsId::Complete),
            Ok(true)
        );
        assert_eq!(
            oracle_is(&ex8(), &ArgSet::empty(5), SemanticsId::ConflictFree),
            Ok(true)
        );
        assert_eq!(
            oracle_is(&ex17(), &set(5, &[1, 3, 5]), SemanticsId::Grounded),
            Ok(true)
        );
        assert_eq!(
            oracle_is(&ex17(), &set(5, &[1, 5]), SemanticsId::Preferred),
            Ok(false)
        );
    }

    #[test]
    fn enumerate_examples() {
        let cf = oracle_enumerate(&ex8(), SemanticsId::ConflictFree).unwrap();
        assert_eq!(
            lists(&cf),
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![4],
                vec![5],
                vec![1, 3],
                vec![1, 4],
                vec![1, 5],
                vec![2, 4],
                vec![3, 5],
                vec![1, 3, 5]
            ]
        );
        let co = oracle_enumerate(&ex17(), SemanticsId::Complete).unwrap();
        assert_eq!(lists(&co), vec![vec![1, 3, 5]]);

        let cycle = af(3, &[(1, 2), (2, 3), (3, 1)]);
        let ad = oracle_enumerate(&cycle, SemanticsId::Admissible).unwrap();
        assert_eq!(lists(&ad), vec![Vec::<usize>::new()]);
        assert!(oracle_enumerate(&cycle, SemanticsId::Stable)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn limit_is_enforced() {
        let big = ArgumentationFramework::from_index_pairs(21, []).unwrap();
        assert_eq!(
            oracle_enumerate(&big, SemanticsId::ConflictFree),
            Err(Error::OracleLimitExceeded { n: 21, limit: 20 })
        );
    }
}
