use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {n} out of range for type {ty} (need n >= {min})")]
    RankOutOfRange { ty: char, n: usize, min: usize },
    #[error("node index {r} out of range 1..={n}")]
    NodeOutOfRange { r: usize, n: usize },
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid window {0:?}: absolute values must be a permutation of 1..=n")]
    InvalidWindow(Vec<i32>),
    #[error("window {0:?} has an odd number of sign changes, not an element of type D")]
    ParityViolation(Vec<i32>),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0:?} is not a minimal coset representative for r={1}")]
    NotMinRep(Vec<i32>, usize),
    #[error("pair is not Bruhat-comparable")]
    NotComparable,
    #[error("entry is not an extremal element of this context")]
    NotExtremal,
    #[error("labels do not belong to the same context")]
    MismatchedContext,
    #[error("group order {size} exceeds budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("construction mismatch: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
