//! Every framework on up to four arguments, every subset: the block
//! predicates agree with the oracle.

use afmatrix::matrix::build_matrix;
use afmatrix::oracle;
use afmatrix::semantics;
use afmatrix::{ArgSet, ArgumentationFramework};

fn all_frameworks(n: usize) -> impl Iterator<Item = ArgumentationFramework> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    (0..1u64 << (n * n)).map(move |mask| {
        let chosen = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p);
        ArgumentationFramework::from_index_pairs(n, chosen).unwrap()
    })
}

#[test]
fn block_predicates_agree_with_oracle_on_all_small_frameworks() {
    let mut checked = 0u64;
    for n in 0..=4 {
        for af in all_frameworks(n) {
            let m = build_matrix(&af);
            for mask in 0..1u64 << n {
                let s = ArgSet::from_mask(n, mask);
                assert_eq!(
                    semantics::is_conflict_free(&m, &s),
                    oracle::conflict_free(&af, &s)
                );
                assert_eq!(semantics::is_stable(&m, &s), oracle::stable(&af, &s));
                assert_eq!(
                    semantics::is_admissible(&m, &s),
                    oracle::admissible(&af, &s)
                );
                assert_eq!(
                    semantics::is_complete(&m, &s),
                    oracle::complete(&af, &s),
                    "{}{:?}",
                    af.to_apx(),
                    s
                );
                checked += 1;
            }
        }
    }
    // frameworks x subsets: 1x1 + 2x2 + 16x4 + 512x8 + 65536x16
    assert_eq!(checked, 1 + 4 + 64 + 4096 + 1_048_576);
}
