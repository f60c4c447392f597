use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("binomial undefined: k = {k} > n = {n}")]
    BinomialUndefined { n: u32, k: u32 },
    #[error("not skew-symmetric")]
    NotSkewSymmetric,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("operation not defined on {0} basis")]
    WrongBasis(&'static str),
    #[error("bar matrix inconsistent at block ro={ro:?} co={co:?}")]
    BarMatrixInconsistent { ro: Vec<u32>, co: Vec<u32> },
    #[error("quotient reduction unavailable: {0}")]
    QuotientUnavailable(String),
    #[error("not a weight vector")]
    NotAWeightVector,
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("invalid generator {0:?}")]
    InvalidGenerator(String),
    #[error("invalid minor: {0}")]
    InvalidMinor(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("block with {size} matrices exceeds the limit of {limit}")]
    BlockTooLarge { size: usize, limit: usize },
    #[error("row index {0} out of range")]
    RowOutOfRange(usize),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}
