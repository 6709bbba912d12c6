use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is the zero matrix")]
    ZeroMatrix,
    #[error("matrix is rank deficient (determinant 0)")]
    RankDeficient,
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: String },
    #[error("window too short: need at least {needed} terms, got {got}")]
    WindowTooShort { needed: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("root refinement did not certify within {bits} bits")]
    RefinementFailed { bits: u64 },
    #[error("modulus classes stay ambiguous at {bits} bits")]
    UnresolvedClass { bits: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
