//! Exact rational dense linear algebra.

mod echelon;
mod matrix;
mod rational;

pub use echelon::{dense_to_sparse, sparse_rank, Echelon, SparseVec};
pub use matrix::{QMatrix, Rref};
pub use rational::{denominator_lcm, ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },
}
