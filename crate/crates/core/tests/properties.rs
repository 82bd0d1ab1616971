use std::collections::BTreeSet;

use afmatrix::af::{parse_apx, parse_tgf};
use afmatrix::harness::{lattice_check, random_af, GeneratorConfig};
use afmatrix::matrix::{a_block, build_matrix, c_block, cf_block, complementary_block, s_block};
use afmatrix::oracle;
use afmatrix::semantics::{self, enumerate};
use afmatrix::{ArgSet, ArgumentationFramework, SemanticsId};
use proptest::prelude::*;

fn framework(max_n: usize) -> impl Strategy<Value = ArgumentationFramework> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..=n * n).prop_map(move |pairs| {
            let pairs = if n == 0 { vec![] } else { pairs };
            ArgumentationFramework::from_index_pairs(n, pairs).unwrap()
        })
    })
}

fn named_framework() -> impl Strategy<Value = ArgumentationFramework> {
    proptest::collection::btree_set("[a-z][a-z0-9_]{0,4}", 1..7).prop_flat_map(|labels| {
        let labels: Vec<String> = labels.into_iter().collect();
        let n = labels.len();
        proptest::collection::vec((0..n, 0..n), 0..=n * n).prop_map(move |pairs| {
            let pairs: Vec<(&str, &str)> = pairs
                .iter()
                .map(|&(a, b)| (labels[a].as_str(), labels[b].as_str()))
                .collect();
            ArgumentationFramework::from_pairs(labels.clone(), pairs).unwrap()
        })
    })
}

fn subsets(n: usize) -> impl Iterator<Item = ArgSet> {
    (0..1u64 << n).map(move |m| ArgSet::from_mask(n, m))
}

proptest! {
    #[test]
    fn apx_and_tgf_round_trip(af in named_framework()) {
        let apx = parse_apx(&af.to_apx()).unwrap();
        prop_assert_eq!(&apx, &af);
        let tgf = parse_tgf(&af.to_tgf()).unwrap();
        prop_assert_eq!(&tgf, &af);
        prop_assert_eq!(parse_apx(&af.to_apx()).unwrap(), apx);
        prop_assert!(af.attack_count() <= af.len() * af.len());
    }

    #[test]
    fn matrix_matches_attack_relation(af in framework(9)) {
        let m = build_matrix(&af);
        prop_assert_eq!(m.dimension(), af.len());
        let attacks: BTreeSet<(usize, usize)> = af.attacks().collect();
        for i in 0..af.len() {
            for j in 0..af.len() {
                prop_assert_eq!(m.get(i, j), attacks.contains(&(i, j)));
            }
        }
    }

    #[test]
    fn blocks_partition_and_complement(af in framework(7)) {
        let m = build_matrix(&af);
        let n = af.len();
        for s in subsets(n) {
            let sb = s_block(&m, &s);
            let ab = a_block(&m, &s);
            prop_assert_eq!(complementary_block(&m, &sb).unwrap(), ab.clone());
            if !s.is_empty() {
                let cf = cf_block(&m, &s).unwrap();
                prop_assert_eq!(complementary_block(&m, &cf).unwrap(), c_block(&m, &s));
                prop_assert_eq!(cf_block(&m, &s).unwrap(), cf);
            }
            let mut rows: Vec<usize> = sb.row_indices().iter().chain(ab.row_indices()).copied().collect();
            let mut cols: Vec<usize> = sb.col_indices().iter().chain(ab.col_indices()).copied().collect();
            rows.sort_unstable();
            cols.sort_unstable();
            prop_assert_eq!(&rows, &(0..n).collect::<Vec<_>>());
            prop_assert_eq!(&cols, &(0..n).collect::<Vec<_>>());
            for r in 0..sb.rows() {
                for t in 0..sb.cols() {
                    prop_assert_eq!(sb.get(r, t), m.get(sb.row_indices()[r], sb.col_indices()[t]));
                }
            }
        }
    }

    #[test]
    fn block_predicates_match_oracle(af in framework(6)) {
        let m = build_matrix(&af);
        for s in subsets(af.len()) {
            prop_assert_eq!(semantics::is_conflict_free(&m, &s), oracle::conflict_free(&af, &s));
            prop_assert_eq!(semantics::is_stable(&m, &s), oracle::stable(&af, &s));
            prop_assert_eq!(semantics::is_admissible(&m, &s), oracle::admissible(&af, &s));
            prop_assert_eq!(semantics::is_complete(&m, &s), oracle::complete(&af, &s));
            prop_assert_eq!(semantics::range_of(&m, &s), oracle::range(&af, &s));
        }
    }

    #[test]
    fn families_match_oracle(af in framework(7)) {
        let m = build_matrix(&af);
        for sem in SemanticsId::ALL {
            prop_assert_eq!(enumerate(&m, sem).unwrap(), oracle::oracle_enumerate(&af, sem).unwrap(), "{}", sem);
        }
        prop_assert!(oracle::oracle_enumerate(&af, SemanticsId::Admissible).unwrap().contains(&ArgSet::empty(af.len())));
    }

    #[test]
    fn semantics_lattice_holds(af in framework(8)) {
        prop_assert_eq!(lattice_check(&af).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn generator_is_deterministic(n in 0usize..10, p in 0.0f64..=1.0, loops: bool, seed: u64) {
        let cfg = GeneratorConfig { n, attack_probability: p, allow_self_attacks: loops, seed };
        let a = random_af(&cfg).unwrap();
        prop_assert_eq!(&a, &random_af(&cfg).unwrap());
        prop_assert_eq!(a.len(), n);
        if !loops {
            prop_assert!(a.attacks().all(|(x, y)| x != y));
        }
    }
}
