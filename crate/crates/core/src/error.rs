use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("epsilon undefined for vertices {0} and {1}")]
    EpsilonUndefined(i32, i32),
    #[error("invalid root [{0}, {1}]")]
    InvalidRoot(i32, i32),
    #[error("invalid Kostant partition: {0}")]
    InvalidPartition(String),
    #[error("enumeration guard exceeded: {0}")]
    SizeGuard(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation is not a minimal coset representative")]
    NotMinimalCosetRep,
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("invalid cycle ({0} -> {1})")]
    InvalidCycle(usize, usize),
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("invalid composition data: {0}")]
    InvalidData(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("unsupported ring: {0}")]
    Ring(String),
}

pub type Result<T> = std::result::Result<T, Error>;
