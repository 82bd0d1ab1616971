//! Boolean attack-matrix toolkit for finite Dung argumentation frameworks.
//!
//! A framework `(A, R)` is turned into its `n × n` attack matrix, and the
//! classic extension semantics are decided by zero-tests on sub-blocks of
//! that matrix:
//!
//! | block    | rows      | columns   | decides                        |
//! |----------|-----------|-----------|--------------------------------|
//! | cf-block | `S`       | `S`       | conflict-freeness (zero block) |
//! | s-block  | `S`       | `A \ S`   | stability (no zero column)     |
//! | a-block  | `A \ S`   | `S`       | admissibility (with s-block)   |
//! | c-block  | `A \ S`   | `A \ S`   | completeness (with s-block)    |
//!
//! Every block-based decision is cross-checked by [`oracle`], a naive
//! implementation that works on the attack relation directly, and by the
//! randomized campaigns in [`harness`].

pub mod af;
pub mod argset;
pub mod cli;
pub mod error;
pub mod extension;
pub mod harness;
pub mod matrix;
pub mod oracle;
pub mod rng;
pub mod semantics;

pub use af::ArgumentationFramework;
pub use argset::ArgSet;
pub use error::{Error, Result};
pub use extension::{ExtensionSet, SemanticsId};
pub use matrix::{AttackMatrix, Block};
