use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

/// Errors produced by the numeric core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {lhs:?} vs {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("no Hadamard construction for order {0}")]
    UnsupportedOrder(usize),
    #[error("Cholesky factorization failed at pivot {0}")]
    CholeskyFailure(usize),
    #[error("matrix is singular to working precision")]
    Singular,
    #[error("rotation is not orthogonal (Gram error {0:e})")]
    NonOrthogonal(f64),
    #[error("input has rank {rank} but {cols} columns are required to be independent")]
    RankDeficient { rank: usize, cols: usize },
    #[error("non-finite value at flat index {0}")]
    NonFinite(usize),
    #[error("width {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("code {code} is out of range for {scheme}")]
    CorruptCode { code: i32, scheme: &'static str },
    #[error("token {token} is out of range for a vocabulary of {vocab}")]
    TokenOutOfRange { token: u32, vocab: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("optimization diverged at iteration {iter}")]
    Divergence { iter: usize, trace: Vec<f64> },
}

pub type Result<T> = core::result::Result<T, Error>;
