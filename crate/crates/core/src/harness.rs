//! Differential validation of the block semantics against the oracle.
//!
//! A campaign generates seeded random frameworks and, for each one,
//!
//! * compares the four block predicates with the oracle on every subset,
//! * surveys the literal completeness criterion under both readings on
//!   every admissible subset,
//! * compares all nine enumerated families with the oracle's, and
//! * checks the inclusion and cardinality relations between semantics.
//!
//! Disagreements are collected as [`Discrepancy`] records that carry the
//! framework in APX form, so each one can be replayed on its own.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::af::{parse_apx, ArgumentationFramework};
use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::extension::SemanticsId;
use crate::matrix::{build_matrix, AttackMatrix};
use crate::oracle;
use crate::rng::Xoshiro256StarStar;
use crate::semantics::{self, CorrespondenceReading};

/// Largest framework accepted by the per-subset checks.
pub const HARNESS_LIMIT: usize = 12;

pub const THEOREM20: &str = "theorem20_literal";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n: usize,
    pub attack_probability: f64,
    pub allow_self_attacks: bool,
    pub seed: u64,
}

/// Directed Erdős–Rényi framework with labels `1..=n`.
///
/// Ordered pairs are visited row by row (`(0,0), (0,1), ..., (n-1,n-1)`) and
/// each one draws a single Bernoulli trial from [`Xoshiro256StarStar`]
/// seeded with `cfg.seed`. Diagonal pairs draw nothing unless self-attacks
/// are allowed.
pub fn random_af(cfg: &GeneratorConfig) -> Result<ArgumentationFramework> {
    let p = cfg.attack_probability;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::PreconditionViolated(format!(
            "attack probability {p} outside [0, 1]"
        )));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(cfg.seed);
    let mut pairs = Vec::new();
    for i in 0..cfg.n {
        for j in 0..cfg.n {
            if i == j && !cfg.allow_self_attacks {
                continue;
            }
            if rng.bernoulli(p) {
                pairs.push((i, j));
            }
        }
    }
    ArgumentationFramework::from_index_pairs(cfg.n, pairs)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: u64,
    pub agreements: u64,
    pub discrepancies: u64,
}

impl Tally {
    fn record(&mut self, agree: bool) {
        self.checked += 1;
        if agree {
            self.agreements += 1;
        } else {
            self.discrepancies += 1;
        }
    }

    fn add(&mut self, other: &Tally) {
        self.checked += other.checked;
        self.agreements += other.agreements;
        self.discrepancies += other.discrepancies;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Discrepancy {
    /// The framework, serialized as APX.
    pub framework: String,
    pub predicate: String,
    pub reading: Option<String>,
    /// Labels of the subset, in index order.
    pub subset: Vec<String>,
    pub block_verdict: bool,
    pub oracle_verdict: bool,
}

impl Discrepancy {
    /// True when the record documents the literal completeness criterion
    /// rather than one of the solving predicates.
    pub fn is_literal_theorem(&self) -> bool {
        self.predicate == THEOREM20
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeViolation {
    pub framework: String,
    pub property: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub campaign: Option<CampaignConfig>,
    pub frameworks_tested: u64,
    pub subsets_tested: u64,
    /// Per-predicate tallies, keyed e.g. `is_stable`,
    /// `theorem20_literal[TARGET_ALIGNED]` or `enumerate[PR]`.
    pub predicates: BTreeMap<String, Tally>,
    pub lattice_violations: Vec<LatticeViolation>,
    pub discrepancies: Vec<Discrepancy>,
}

impl ValidationReport {
    fn tally(&mut self, key: &str) -> &mut Tally {
        self.predicates.entry(key.to_string()).or_default()
    }

    /// Adds `other` into `self`; call [`ValidationReport::canonicalize`]
    /// after the last merge.
    pub fn merge(&mut self, other: ValidationReport) {
        self.frameworks_tested += other.frameworks_tested;
        self.subsets_tested += other.subsets_tested;
        for (k, t) in &other.predicates {
            self.tally(k).add(t);
        }
        self.lattice_violations.extend(other.lattice_violations);
        self.discrepancies.extend(other.discrepancies);
    }

    pub fn canonicalize(&mut self) {
        self.discrepancies.sort();
        self.lattice_violations.sort();
    }

    /// Discrepancies of the solving predicates and families. Any of these
    /// means a block characterization disagrees with the oracle.
    pub fn core_discrepancies(&self) -> impl Iterator<Item = &Discrepancy> {
        self.discrepancies
            .iter()
            .filter(|d| !d.is_literal_theorem())
    }

    pub fn literal_discrepancies(&self) -> impl Iterator<Item = &Discrepancy> {
        self.discrepancies.iter().filter(|d| d.is_literal_theorem())
    }

    pub fn is_clean(&self) -> bool {
        self.core_discrepancies().next().is_none() && self.lattice_violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Line-oriented human summary.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "frameworks tested: {}", self.frameworks_tested);
        let _ = writeln!(out, "subsets tested: {}", self.subsets_tested);
        for (name, t) in &self.predicates {
            let _ = writeln!(
                out,
                "{name}: checked {}, agree {}, disagree {}",
                t.checked, t.agreements, t.discrepancies
            );
        }
        let _ = writeln!(out, "lattice violations: {}", self.lattice_violations.len());
        let core = self.core_discrepancies().count();
        let literal = self.literal_discrepancies().count();
        let _ = writeln!(out, "block/oracle discrepancies: {core}");
        let _ = writeln!(out, "literal theorem 20 discrepancies: {literal}");
        let verdict = if self.is_clean() {
            "PASS: block characterizations agree with the oracle"
        } else {
            "FAIL: block characterizations disagree with the oracle"
        };
        let _ = writeln!(out, "{verdict}");
        out
    }
}

fn check_size(af: &ArgumentationFramework) -> Result<()> {
    if af.len() > HARNESS_LIMIT {
        return Err(Error::OracleLimitExceeded {
            n: af.len(),
            limit: HARNESS_LIMIT,
        });
    }
    Ok(())
}

fn labels(af: &ArgumentationFramework, s: &ArgSet) -> Vec<String> {
    s.iter().map(|i| af.label(i).to_string()).collect()
}

type BlockPredicate = fn(&AttackMatrix, &ArgSet) -> bool;
type OraclePredicate = fn(&ArgumentationFramework, &ArgSet) -> bool;

const PREDICATES: [(&str, BlockPredicate, OraclePredicate); 4] = [
    (
        "is_conflict_free",
        semantics::is_conflict_free,
        oracle::conflict_free,
    ),
    ("is_stable", semantics::is_stable, oracle::stable),
    (
        "is_admissible",
        semantics::is_admissible,
        oracle::admissible,
    ),
    ("is_complete", semantics::is_complete, oracle::complete),
];

/// Compares the four block predicates with the oracle on all `2^n` subsets.
pub fn differential_check(af: &ArgumentationFramework) -> Result<ValidationReport> {
    check_size(af)?;
    let n = af.len();
    let m = build_matrix(af);
    let apx = af.to_apx();
    let mut report = ValidationReport {
        frameworks_tested: 1,
        ..Default::default()
    };
    for mask in 0..1u64 << n {
        let s = ArgSet::from_mask(n, mask);
        report.subsets_tested += 1;
        for (name, block, reference) in PREDICATES {
            let (b, o) = (block(&m, &s), reference(af, &s));
            report.tally(name).record(b == o);
            if b != o {
                report.discrepancies.push(Discrepancy {
                    framework: apx.clone(),
                    predicate: name.to_string(),
                    reading: None,
                    subset: labels(af, &s),
                    block_verdict: b,
                    oracle_verdict: o,
                });
            }
        }
    }
    Ok(report)
}

/// Evaluates the literal completeness criterion under both readings on
/// every admissible subset and compares it with oracle completeness.
pub fn theorem20_survey(af: &ArgumentationFramework) -> Result<ValidationReport> {
    check_size(af)?;
    let n = af.len();
    let m = build_matrix(af);
    let apx = af.to_apx();
    let mut report = ValidationReport {
        frameworks_tested: 1,
        ..Default::default()
    };
    for mask in 0..1u64 << n {
        let s = ArgSet::from_mask(n, mask);
        if !oracle::admissible(af, &s) {
            continue;
        }
        let truth = oracle::complete(af, &s);
        for reading in CorrespondenceReading::ALL {
            let literal = semantics::theorem20_literal(&m, &s, reading)?;
            report
                .tally(&format!("{THEOREM20}[{reading}]"))
                .record(literal == truth);
            if literal != truth {
                report.discrepancies.push(Discrepancy {
                    framework: apx.clone(),
                    predicate: THEOREM20.to_string(),
                    reading: Some(reading.to_string()),
                    subset: labels(af, &s),
                    block_verdict: literal,
                    oracle_verdict: truth,
                });
            }
        }
    }
    Ok(report)
}

/// Compares every enumerated family with the oracle's. A mismatch is
/// recorded once per set in the symmetric difference.
pub fn family_check(af: &ArgumentationFramework) -> Result<ValidationReport> {
    check_size(af)?;
    let m = build_matrix(af);
    let apx = af.to_apx();
    let mut report = ValidationReport {
        frameworks_tested: 1,
        ..Default::default()
    };
    for sem in SemanticsId::ALL {
        let key = format!("enumerate[{sem}]");
        let ours = semantics::enumerate(&m, sem)?;
        let theirs = oracle::oracle_enumerate(af, sem)?;
        report.tally(&key).record(ours == theirs);
        for s in ours.iter().chain(theirs.iter()) {
            let (b, o) = (ours.contains(s), theirs.contains(s));
            if b != o {
                report.discrepancies.push(Discrepancy {
                    framework: apx.clone(),
                    predicate: key.clone(),
                    reading: None,
                    subset: labels(af, s),
                    block_verdict: b,
                    oracle_verdict: o,
                });
            }
        }
    }
    Ok(report)
}

/// Checks the structural relations between the enumerated semantics and
/// returns a description of each one that fails.
pub fn lattice_check(af: &ArgumentationFramework) -> Result<Vec<String>> {
    use SemanticsId::*;
    let m = build_matrix(af);
    let fam = |sem| semantics::enumerate(&m, sem);
    let (st, pr, co, ad) = (
        fam(Stable)?,
        fam(Preferred)?,
        fam(Complete)?,
        fam(Admissible)?,
    );
    let (gr, id, sst, eag) = (fam(Grounded)?, fam(Ideal)?, fam(SemiStable)?, fam(Eager)?);
    let full = ArgSet::full(af.len());

    let mut violations = Vec::new();
    let mut require = |ok: bool, what: &str| {
        if !ok {
            violations.push(what.to_string());
        }
    };
    require(st.is_subfamily_of(&pr), "ST subfamily of PR");
    require(pr.is_subfamily_of(&co), "PR subfamily of CO");
    require(co.is_subfamily_of(&ad), "CO subfamily of AD");
    require(gr.len() == 1, "GR is a singleton");
    require(id.len() == 1, "ID is a singleton");
    require(eag.len() == 1, "EAG is a singleton");
    for (sem, f) in [
        (Admissible, &ad),
        (Preferred, &pr),
        (Complete, &co),
        (Grounded, &gr),
    ] {
        require(!f.is_empty(), &format!("{sem} is nonempty"));
    }
    if let Some(g) = gr.iter().next() {
        require(
            co.iter().all(|c| g.is_subset(c)),
            "GR contained in every CO",
        );
    }
    if let Some(i) = id.iter().next() {
        require(
            pr.iter().all(|p| i.is_subset(p)),
            "ID contained in every PR",
        );
    }
    if let Some(e) = eag.iter().next() {
        require(
            sst.iter().all(|s| e.is_subset(s)),
            "EAG contained in every SST",
        );
    }
    if !st.is_empty() {
        require(sst == st, "SST equals ST when ST is nonempty");
    }
    require(
        st.iter().all(|s| semantics::range_of(&m, s) == full),
        "every ST range is A",
    );
    Ok(violations)
}

/// Runs every check on one framework.
pub fn check_framework(af: &ArgumentationFramework) -> Result<ValidationReport> {
    let mut report = differential_check(af)?;
    let survey = theorem20_survey(af)?;
    let families = family_check(af)?;
    report.merge(survey);
    report.merge(families);
    report.frameworks_tested = 1;
    report.subsets_tested = 1 << af.len();

    let apx = af.to_apx();
    let violations = lattice_check(af)?;
    report
        .tally("semantics_lattice")
        .record(violations.is_empty());
    report
        .lattice_violations
        .extend(violations.into_iter().map(|property| LatticeViolation {
            framework: apx.clone(),
            property,
        }));
    Ok(report)
}

/// Runs [`check_framework`] on each framework, in parallel, and merges the
/// results in input order.
pub fn check_frameworks(frameworks: &[ArgumentationFramework]) -> Result<ValidationReport> {
    let parts: Vec<ValidationReport> = frameworks
        .par_iter()
        .map(check_framework)
        .collect::<Result<_>>()?;
    let mut report = ValidationReport::default();
    for part in parts {
        report.merge(part);
    }
    report.canonicalize();
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub trials: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub p_list: Vec<f64>,
    pub base_seed: u64,
    pub allow_self_attacks: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            trials: 500,
            n_min: 1,
            n_max: 8,
            p_list: vec![0.1, 0.25, 0.5],
            base_seed: 42,
            allow_self_attacks: true,
        }
    }
}

impl CampaignConfig {
    /// Generator settings of trial `t`: seed `base_seed + t`, probability
    /// `p_list[t mod |p_list|]`, and size cycling through `n_min..=n_max`
    /// once per pass over `p_list`.
    pub fn trial(&self, t: u64) -> GeneratorConfig {
        let k = self.p_list.len() as u64;
        let span = (self.n_max - self.n_min + 1) as u64;
        GeneratorConfig {
            n: self.n_min + ((t / k) % span) as usize,
            attack_probability: self.p_list[(t % k) as usize],
            allow_self_attacks: self.allow_self_attacks,
            seed: self.base_seed.wrapping_add(t),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max {
            return Err(Error::PreconditionViolated(format!(
                "empty size range {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.n_max > HARNESS_LIMIT {
            return Err(Error::OracleLimitExceeded {
                n: self.n_max,
                limit: HARNESS_LIMIT,
            });
        }
        if self.p_list.is_empty() {
            return Err(Error::PreconditionViolated(
                "no attack probabilities".into(),
            ));
        }
        if let Some(p) = self.p_list.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::PreconditionViolated(format!(
                "attack probability {p} outside [0, 1]"
            )));
        }
        Ok(())
    }

    pub fn frameworks(&self) -> Result<Vec<ArgumentationFramework>> {
        self.validate()?;
        (0..self.trials)
            .map(|t| random_af(&self.trial(t)))
            .collect()
    }
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<ValidationReport> {
    let mut report = check_frameworks(&cfg.frameworks()?)?;
    report.campaign = Some(cfg.clone());
    Ok(report)
}

/// Recomputes `(block_verdict, oracle_verdict)` for a recorded discrepancy.
pub fn replay(d: &Discrepancy) -> Result<(bool, bool)> {
    let af = if d.framework.trim().is_empty() {
        ArgumentationFramework::default()
    } else {
        parse_apx(&d.framework)?
    };
    let indices = d
        .subset
        .iter()
        .map(|l| {
            af.index_of(l).ok_or_else(|| Error::UnknownArgument {
                label: l.clone(),
                line: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let s = ArgSet::from_indices(af.len(), indices)?;
    let m = build_matrix(&af);

    if d.predicate == THEOREM20 {
        let reading: CorrespondenceReading = d
            .reading
            .as_deref()
            .unwrap_or_default()
            .parse()
            .map_err(Error::PreconditionViolated)?;
        return Ok((
            semantics::theorem20_literal(&m, &s, reading)?,
            oracle::complete(&af, &s),
        ));
    }
    if let Some((_, block, reference)) = PREDICATES.iter().find(|(name, ..)| *name == d.predicate) {
        return Ok((block(&m, &s), reference(&af, &s)));
    }
    if let Some(code) = d
        .predicate
        .strip_prefix("enumerate[")
        .and_then(|rest| rest.strip_suffix(']'))
    {
        let sem: SemanticsId = code.parse().map_err(Error::PreconditionViolated)?;
        return Ok((
            semantics::enumerate(&m, sem)?.contains(&s),
            oracle::oracle_enumerate(&af, sem)?.contains(&s),
        ));
    }
    Err(Error::PreconditionViolated(format!(
        "unknown predicate `{}`",
        d.predicate
    )))
}
