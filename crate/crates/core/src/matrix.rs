//! The attack matrix `M(F)` and its block algebra.
//!
//! `M(F)` is the `n × n` Boolean matrix with `a[i][j] = 1` exactly when
//! argument `i` attacks argument `j`. A block is the sub-matrix at the
//! intersection of an increasing list of rows and an increasing list of
//! columns; the four blocks attached to a set `S` are
//!
//! * cf-block: rows `S`, columns `S`
//! * s-block: rows `S`, columns `A \ S`
//! * a-block: rows `A \ S`, columns `S`
//! * c-block: rows `A \ S`, columns `A \ S`
//!
//! so the a-block complements the s-block and the c-block complements the
//! cf-block.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::af::ArgumentationFramework;
use crate::argset::ArgSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct AttackMatrix {
    n: usize,
    rows: Vec<FixedBitSet>,
    cols: Vec<FixedBitSet>,
}

impl AttackMatrix {
    pub fn from_framework(af: &ArgumentationFramework) -> Self {
        let n = af.len();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        let mut cols = vec![FixedBitSet::with_capacity(n); n];
        for (i, j) in af.attacks() {
            rows[i].insert(j);
            cols[j].insert(i);
        }
        AttackMatrix { n, rows, cols }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Targets of argument `i`, i.e. row `i`.
    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    /// Attackers of argument `j`, i.e. column `j`.
    pub fn col(&self, j: usize) -> &FixedBitSet {
        &self.cols[j]
    }

    fn check_set(&self, s: &ArgSet) {
        assert_eq!(
            s.universe_size(),
            self.n,
            "argument set universe does not match matrix dimension"
        );
    }
}

/// Shorthand for [`AttackMatrix::from_framework`].
pub fn build_matrix(af: &ArgumentationFramework) -> AttackMatrix {
    AttackMatrix::from_framework(af)
}

impl fmt::Display for AttackMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.n, self.n, |i, j| self.get(i, j))
    }
}

impl fmt::Debug for AttackMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "AttackMatrix({}x{})", self.n, self.n)?;
        fmt::Display::fmt(self, f)
    }
}

fn write_rows(
    f: &mut fmt::Formatter<'_>,
    rows: usize,
    cols: usize,
    entry: impl Fn(usize, usize) -> bool,
) -> fmt::Result {
    for r in 0..rows {
        for c in 0..cols {
            if c > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if entry(r, c) { "1" } else { "0" })?;
        }
        f.write_str("\n")?;
    }
    Ok(())
}

/// A materialized `k × h` sub-matrix of an [`AttackMatrix`].
///
/// `entries[r]` holds the bits `a[row_indices[r]][col_indices[t]]` for
/// `t in 0..h`. Blocks with zero rows or zero columns are legal and zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Block {
    row_indices: Vec<usize>,
    col_indices: Vec<usize>,
    entries: Vec<FixedBitSet>,
}

impl Block {
    /// Extracts the block at the intersection of `rows` and `cols`, both of
    /// which must be strictly increasing and inside the matrix.
    pub fn extract(m: &AttackMatrix, rows: &[usize], cols: &[usize]) -> Result<Block> {
        check_indices(m.n, rows, "row")?;
        check_indices(m.n, cols, "column")?;
        Ok(Block::extract_unchecked(m, rows.to_vec(), cols.to_vec()))
    }

    fn extract_unchecked(m: &AttackMatrix, rows: Vec<usize>, cols: Vec<usize>) -> Block {
        let entries = rows
            .iter()
            .map(|&i| {
                let mut bits = FixedBitSet::with_capacity(cols.len());
                for (t, &j) in cols.iter().enumerate() {
                    if m.get(i, j) {
                        bits.insert(t);
                    }
                }
                bits
            })
            .collect();
        Block {
            row_indices: rows,
            col_indices: cols,
            entries,
        }
    }

    pub fn row_indices(&self) -> &[usize] {
        &self.row_indices
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn rows(&self) -> usize {
        self.row_indices.len()
    }

    pub fn cols(&self) -> usize {
        self.col_indices.len()
    }

    pub fn is_principal(&self) -> bool {
        self.row_indices == self.col_indices
    }

    /// Entry at block position `(r, t)`. Panics when out of range.
    pub fn get(&self, r: usize, t: usize) -> bool {
        assert!(t < self.cols(), "column {t} out of range");
        self.entries[r].contains(t)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FixedBitSet::is_clear)
    }

    pub fn row_is_nonzero(&self, r: usize) -> Result<bool> {
        self.entries
            .get(r)
            .map(|row| !row.is_clear())
            .ok_or_else(|| {
                Error::DimensionMismatch(format!("row {r} outside block with {} rows", self.rows()))
            })
    }

    pub fn col_is_nonzero(&self, t: usize) -> Result<bool> {
        if t >= self.cols() {
            return Err(Error::DimensionMismatch(format!(
                "column {t} outside block with {} columns",
                self.cols()
            )));
        }
        Ok(self.entries.iter().any(|row| row.contains(t)))
    }

    /// Entries as nested vectors, row by row.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows())
            .map(|r| (0..self.cols()).map(|t| self.get(r, t) as u8).collect())
            .collect()
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.rows(), self.cols(), |r, t| self.get(r, t))
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Block(rows={:?}, cols={:?})",
            self.row_indices, self.col_indices
        )?;
        fmt::Display::fmt(self, f)
    }
}

fn check_indices(n: usize, indices: &[usize], what: &str) -> Result<()> {
    if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
        return Err(Error::DimensionMismatch(format!(
            "{what} index {bad} outside matrix of order {n}"
        )));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::DimensionMismatch(format!(
            "{what} indices {indices:?} are not strictly increasing"
        )));
    }
    Ok(())
}

/// Principal block on `S`. The empty set has no cf-block.
pub fn cf_block(m: &AttackMatrix, s: &ArgSet) -> Result<Block> {
    m.check_set(s);
    if s.is_empty() {
        return Err(Error::EmptySelection);
    }
    Ok(Block::extract_unchecked(m, s.to_vec(), s.to_vec()))
}

/// Rows `S`, columns `A \ S`: attacks leaving `S`.
pub fn s_block(m: &AttackMatrix, s: &ArgSet) -> Block {
    m.check_set(s);
    Block::extract_unchecked(m, s.to_vec(), s.complement().to_vec())
}

/// Rows `A \ S`, columns `S`: attacks entering `S`.
pub fn a_block(m: &AttackMatrix, s: &ArgSet) -> Block {
    m.check_set(s);
    Block::extract_unchecked(m, s.complement().to_vec(), s.to_vec())
}

/// Principal block on `A \ S`.
pub fn c_block(m: &AttackMatrix, s: &ArgSet) -> Block {
    m.check_set(s);
    let out = s.complement().to_vec();
    Block::extract_unchecked(m, out.clone(), out)
}

/// The block on the rows and columns of `M` that `b` does not use.
pub fn complementary_block(m: &AttackMatrix, b: &Block) -> Result<Block> {
    check_indices(m.n, &b.row_indices, "row")?;
    check_indices(m.n, &b.col_indices, "column")?;
    let missing = |used: &[usize]| -> Vec<usize> {
        let mut mask = FixedBitSet::with_capacity(m.n);
        used.iter().for_each(|&i| mask.insert(i));
        mask.toggle_range(..);
        mask.ones().collect()
    };
    Ok(Block::extract_unchecked(
        m,
        missing(&b.row_indices),
        missing(&b.col_indices),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(n: usize, pairs: &[(usize, usize)]) -> AttackMatrix {
        let af =
            ArgumentationFramework::from_index_pairs(n, pairs.iter().map(|&(a, b)| (a - 1, b - 1)))
                .unwrap();
        build_matrix(&af)
    }

    fn set(n: usize, one_based: &[usize]) -> ArgSet {
        ArgSet::from_indices(n, one_based.iter().map(|i| i - 1)).unwrap()
    }

    fn rows(m: &AttackMatrix) -> Vec<Vec<u8>> {
        (0..m.dimension())
            .map(|i| (0..m.dimension()).map(|j| m.get(i, j) as u8).collect())
            .collect()
    }

    // (1,2),(2,3),(2,5),(4,3),(5,4)
    fn ex8() -> AttackMatrix {
        matrix(5, &[(1, 2), (2, 3), (2, 5), (4, 3), (5, 4)])
    }

    // ex8 plus (2,4)
    fn ex17() -> AttackMatrix {
        matrix(5, &[(1, 2), (2, 3), (2, 4), (2, 5), (4, 3), (5, 4)])
    }

    #[test]
    fn build_matrix_examples() {
        assert_eq!(
            rows(&matrix(3, &[(1, 2), (2, 3), (3, 1)])),
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]
        );
        assert_eq!(
            rows(&matrix(4, &[(1, 2), (1, 3), (2, 1), (2, 3), (3, 4)])),
            vec![
                vec![0, 1, 1, 0],
                vec![1, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 0, 0]
            ]
        );
        assert_eq!(rows(&matrix(1, &[])), vec![vec![0]]);
    }

    #[test]
    fn display_matches_row_layout() {
        let m = matrix(3, &[(1, 2), (2, 3), (3, 1)]);
        assert_eq!(m.to_string(), "0 1 0\n0 0 1\n1 0 0\n");
    }

    #[test]
    fn cf_block_examples() {
        let b = cf_block(&ex8(), &set(5, &[1, 3, 5])).unwrap();
        assert_eq!(b.to_rows(), vec![vec![0; 3]; 3]);
        assert!(b.is_zero());

        let b = cf_block(&ex17(), &set(5, &[2, 4])).unwrap();
        assert_eq!(b.to_rows(), vec![vec![0, 1], vec![0, 0]]);

        let b = cf_block(&ex8(), &set(5, &[3])).unwrap();
        assert_eq!(b.to_rows(), vec![vec![0]]);

        assert_eq!(
            cf_block(&ex8(), &ArgSet::empty(5)),
            Err(Error::EmptySelection)
        );
    }

    #[test]
    fn s_block_examples() {
        let b = s_block(&ex8(), &set(5, &[1, 3, 5]));
        assert_eq!(b.row_indices(), &[0, 2, 4]);
        assert_eq!(b.col_indices(), &[1, 3]);
        assert_eq!(b.to_rows(), vec![vec![1, 0], vec![0, 0], vec![0, 1]]);
        assert_eq!(b.col_is_nonzero(0), Ok(true));
        assert_eq!(b.col_is_nonzero(1), Ok(true));

        let b = s_block(&ex17(), &set(5, &[1, 5]));
        assert_eq!(b.to_rows(), vec![vec![1, 0, 0], vec![0, 0, 1]]);

        let b = s_block(&ex8(), &ArgSet::full(5));
        assert_eq!((b.rows(), b.cols()), (5, 0));
        assert!(b.is_zero());
    }

    #[test]
    fn a_block_examples() {
        let b = a_block(&ex8(), &set(5, &[1, 5]));
        assert_eq!(b.row_indices(), &[1, 2, 3]);
        assert_eq!(b.to_rows(), vec![vec![0, 1], vec![0, 0], vec![0, 0]]);

        let b = a_block(&ex8(), &ArgSet::full(5));
        assert_eq!((b.rows(), b.cols()), (0, 5));
        assert_eq!(b.col_is_nonzero(4), Ok(false));
    }

    #[test]
    fn c_block_examples() {
        let b = c_block(&ex17(), &set(5, &[1, 3, 5]));
        assert_eq!(b.to_rows(), vec![vec![0, 1], vec![0, 0]]);
        let b = c_block(&ex8(), &set(5, &[1, 3, 5]));
        assert_eq!(b.to_rows(), vec![vec![0, 0], vec![0, 0]]);
        let b = c_block(&ex8(), &ArgSet::full(5));
        assert_eq!((b.rows(), b.cols()), (0, 0));
        assert!(b.is_zero());
    }

    #[test]
    fn complementary_blocks() {
        let m = ex17();
        for mask in 1u64..32 {
            let s = ArgSet::from_mask(5, mask);
            let cf = cf_block(&m, &s).unwrap();
            assert_eq!(complementary_block(&m, &cf).unwrap(), c_block(&m, &s));
            assert_eq!(
                complementary_block(&m, &s_block(&m, &s)).unwrap(),
                a_block(&m, &s)
            );
        }
        let full = cf_block(&m, &ArgSet::full(5)).unwrap();
        let comp = complementary_block(&m, &full).unwrap();
        assert_eq!((comp.rows(), comp.cols()), (0, 0));
    }

    #[test]
    fn dimension_errors() {
        let m = ex8();
        assert!(matches!(
            Block::extract(&m, &[0, 5], &[1]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            Block::extract(&m, &[2, 1], &[1]),
            Err(Error::DimensionMismatch(_))
        ));
        let b = Block::extract(&m, &[0, 1], &[1, 2]).unwrap();
        assert!(matches!(
            b.row_is_nonzero(2),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            b.col_is_nonzero(2),
            Err(Error::DimensionMismatch(_))
        ));

        let big = matrix(6, &[]);
        let foreign = Block::extract(&big, &[5], &[5]).unwrap();
        assert!(matches!(
            complementary_block(&m, &foreign),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn zero_block_predicates() {
        let b = Block::extract(&ex8(), &[], &[]).unwrap();
        assert!(b.is_zero());
        let b = Block::extract(&ex8(), &[], &[0, 1]).unwrap();
        assert_eq!(b.col_is_nonzero(1), Ok(false));
    }
}
