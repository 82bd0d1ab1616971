//! Extension semantics decided by blocks of the attack matrix.
//!
//! With `S = {i_1 < ... < i_k}` and `A \ S = {j_1 < ... < j_h}`:
//!
//! * conflict-free: the cf-block is zero;
//! * stable: conflict-free and every s-block column is nonzero;
//! * admissible: conflict-free and, for each `t`, a nonzero a-block row `t`
//!   implies a nonzero s-block column `t`;
//! * complete: admissible and every `j_t` is undefended, i.e. s-block
//!   column `t` is nonzero or some c-block entry `(p, t)` is set with s-block
//!   column `p` zero.
//!
//! The selection semantics (preferred, grounded, ideal, semi-stable, eager)
//! are computed from the enumerated admissible and complete families.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::extension::{maximal_sets, minimal_sets, ExtensionSet, SemanticsId};
use crate::matrix::{a_block, c_block, cf_block, s_block, AttackMatrix, Block};

/// Default cap on the number of arguments [`enumerate`] accepts.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 24;

pub fn is_conflict_free(m: &AttackMatrix, s: &ArgSet) -> bool {
    if s.is_empty() {
        return true;
    }
    cf_block(m, s).map(|b| b.is_zero()).unwrap_or(true)
}

fn nonzero_cols(b: &Block) -> Vec<bool> {
    (0..b.cols())
        .map(|t| b.col_is_nonzero(t).expect("column in range"))
        .collect()
}

pub fn is_stable(m: &AttackMatrix, s: &ArgSet) -> bool {
    is_conflict_free(m, s) && nonzero_cols(&s_block(m, s)).into_iter().all(|nz| nz)
}

pub fn is_admissible(m: &AttackMatrix, s: &ArgSet) -> bool {
    if !is_conflict_free(m, s) {
        return false;
    }
    let attacked_back = nonzero_cols(&s_block(m, s));
    let attackers = a_block(m, s);
    (0..attackers.rows())
        .all(|t| !attackers.row_is_nonzero(t).expect("row in range") || attacked_back[t])
}

pub fn is_complete(m: &AttackMatrix, s: &ArgSet) -> bool {
    if !is_admissible(m, s) {
        return false;
    }
    let attacked = nonzero_cols(&s_block(m, s));
    let outside = c_block(m, s);
    // j_t is undefended: S itself attacks it, or an outside attacker j_p
    // is left unanswered by S.
    (0..outside.cols())
        .all(|t| attacked[t] || (0..outside.rows()).any(|p| outside.get(p, t) && !attacked[p]))
}

/// Two readings of which s-block column "corresponds" to a nonzero c-block
/// row in the literal completeness criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CorrespondenceReading {
    /// Nonzero c-block row `r` requires s-block column `r` to be zero.
    AttackerAligned,
    /// A set c-block entry `(r, t)` requires s-block column `t` to be zero.
    TargetAligned,
}

impl CorrespondenceReading {
    pub const ALL: [CorrespondenceReading; 2] = [
        CorrespondenceReading::AttackerAligned,
        CorrespondenceReading::TargetAligned,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CorrespondenceReading::AttackerAligned => "ATTACKER_ALIGNED",
            CorrespondenceReading::TargetAligned => "TARGET_ALIGNED",
        }
    }
}

impl fmt::Display for CorrespondenceReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorrespondenceReading {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CorrespondenceReading::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown reading `{s}`"))
    }
}

/// Evaluates the two c-block/s-block conditions of the published
/// completeness theorem word for word, for an admissible `s`:
///
/// 1. the s-block column corresponding to a nonzero c-block row is zero
///    (correspondence per `reading`);
/// 2. the s-block column corresponding to a zero c-block column is nonzero.
///
/// This is an audit artifact. It disagrees with actual completeness on some
/// frameworks, so solving always goes through [`is_complete`].
pub fn theorem20_literal(
    m: &AttackMatrix,
    s: &ArgSet,
    reading: CorrespondenceReading,
) -> Result<bool> {
    if !is_admissible(m, s) {
        return Err(Error::PreconditionViolated(format!(
            "set {:?} is not admissible",
            s.to_vec()
        )));
    }
    let attacked = nonzero_cols(&s_block(m, s));
    let c = c_block(m, s);
    let h = c.cols();

    let cond1 = match reading {
        CorrespondenceReading::AttackerAligned => {
            (0..h).all(|r| !c.row_is_nonzero(r).expect("row in range") || !attacked[r])
        }
        CorrespondenceReading::TargetAligned => {
            (0..h).all(|r| (0..h).all(|t| !c.get(r, t) || !attacked[t]))
        }
    };
    let cond2 = (0..h).all(|t| c.col_is_nonzero(t).expect("column in range") || attacked[t]);
    Ok(cond1 && cond2)
}

/// `S ∪ {b : some a ∈ S attacks b}`.
pub fn range_of(m: &AttackMatrix, s: &ArgSet) -> ArgSet {
    let mut bits = s.bits().clone();
    for i in s.iter() {
        bits.union_with(m.row(i));
    }
    ArgSet::from_bits(bits)
}

/// All conflict-free sets, by depth-first extension over increasing
/// indices. Adding `j` to the current set only needs the new row and column
/// of the growing principal block to be zero against current members.
pub fn enumerate_conflict_free(m: &AttackMatrix) -> ExtensionSet {
    let n = m.dimension();
    let mut out = Vec::new();
    let mut current = FixedBitSet::with_capacity(n);
    extend_conflict_free(m, 0, &mut current, &mut out);
    ExtensionSet::new(n, out)
}

fn extend_conflict_free(
    m: &AttackMatrix,
    start: usize,
    current: &mut FixedBitSet,
    out: &mut Vec<ArgSet>,
) {
    out.push(ArgSet::from_bits(current.clone()));
    for j in start..m.dimension() {
        if m.get(j, j) || !m.row(j).is_disjoint(current) || !m.col(j).is_disjoint(current) {
            continue;
        }
        current.insert(j);
        extend_conflict_free(m, j + 1, current, out);
        current.set(j, false);
    }
}

/// Enumerates `sem(F)` under the default argument limit.
pub fn enumerate(m: &AttackMatrix, sem: SemanticsId) -> Result<ExtensionSet> {
    enumerate_with_limit(m, sem, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_with_limit(
    m: &AttackMatrix,
    sem: SemanticsId,
    limit: usize,
) -> Result<ExtensionSet> {
    let n = m.dimension();
    if n > limit {
        return Err(Error::EnumerationLimitExceeded { n, limit });
    }
    Enumerator::new(m).family(sem)
}

/// Shares the conflict-free search tree and the admissible family between
/// the semantics that build on them.
struct Enumerator<'a> {
    m: &'a AttackMatrix,
    conflict_free: Option<Vec<ArgSet>>,
    admissible: Option<Vec<ArgSet>>,
}

impl<'a> Enumerator<'a> {
    fn new(m: &'a AttackMatrix) -> Self {
        Enumerator {
            m,
            conflict_free: None,
            admissible: None,
        }
    }

    fn conflict_free(&mut self) -> &[ArgSet] {
        let m = self.m;
        self.conflict_free
            .get_or_insert_with(|| enumerate_conflict_free(m).as_slice().to_vec())
    }

    fn filtered(&mut self, pred: fn(&AttackMatrix, &ArgSet) -> bool) -> Vec<ArgSet> {
        let m = self.m;
        self.conflict_free()
            .iter()
            .filter(|s| pred(m, s))
            .cloned()
            .collect()
    }

    fn admissible(&mut self) -> Vec<ArgSet> {
        if self.admissible.is_none() {
            let adm = self.filtered(is_admissible);
            self.admissible = Some(adm);
        }
        self.admissible.clone().unwrap_or_default()
    }

    fn semi_stable(&mut self) -> Vec<ArgSet> {
        let m = self.m;
        let adm = self.admissible();
        let ranges: Vec<ArgSet> = adm.iter().map(|s| range_of(m, s)).collect();
        let maximal_ranges = maximal_sets(&ranges);
        adm.into_iter()
            .zip(ranges)
            .filter(|(_, r)| maximal_ranges.contains(r))
            .map(|(s, _)| s)
            .collect()
    }

    /// The unique `⊆`-maximal admissible subset of `bound`.
    fn maximal_admissible_within(&mut self, bound: &ArgSet, what: &str) -> Result<ArgSet> {
        let inside: Vec<ArgSet> = self
            .admissible()
            .into_iter()
            .filter(|s| s.is_subset(bound))
            .collect();
        unique(maximal_sets(&inside), what)
    }

    fn family(&mut self, sem: SemanticsId) -> Result<ExtensionSet> {
        let n = self.m.dimension();
        let members = match sem {
            SemanticsId::ConflictFree => self.conflict_free().to_vec(),
            SemanticsId::Stable => self.filtered(is_stable),
            SemanticsId::Admissible => self.admissible(),
            SemanticsId::Complete => self.filtered(is_complete),
            SemanticsId::Preferred => maximal_sets(&self.admissible()),
            SemanticsId::Grounded => {
                let complete = self.filtered(is_complete);
                vec![unique(minimal_sets(&complete), "grounded extension")?]
            }
            SemanticsId::Ideal => {
                let preferred = maximal_sets(&self.admissible());
                let bound = ExtensionSet::new(n, preferred).intersection();
                vec![self.maximal_admissible_within(&bound, "ideal extension")?]
            }
            SemanticsId::SemiStable => self.semi_stable(),
            SemanticsId::Eager => {
                let semi = self.semi_stable();
                let bound = ExtensionSet::new(n, semi).intersection();
                vec![self.maximal_admissible_within(&bound, "eager extension")?]
            }
        };
        Ok(ExtensionSet::new(n, members))
    }
}

fn unique(mut candidates: Vec<ArgSet>, what: &str) -> Result<ArgSet> {
    match candidates.len() {
        1 => Ok(candidates.pop().expect("one candidate")),
        k => Err(Error::InternalInvariantViolated(format!(
            "expected a unique {what}, found {k} candidates"
        ))),
    }
}
