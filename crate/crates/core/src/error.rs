use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series is not invertible: constant term {0} is not a nonzero rational")]
    NotInvertible(String),
    #[error("inner series of a composition must have zero constant term, found {0}")]
    NonzeroConstantTerm(String),
    #[error("index {index} out of range (maximum {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("index list must contain at least one entry")]
    EmptyIndexList,
    #[error("order r must be at least 1")]
    ZeroOrder,
    #[error("falling-factorial basis reduction left remainder {0}")]
    BasisRemainder(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
