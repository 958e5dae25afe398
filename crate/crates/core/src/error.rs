use thiserror::Error;

use crate::symfunc::Composition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid m-sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),

    #[error("invalid type vector: {0}")]
    InvalidType(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    /// A quasisymmetric function whose monomial coefficients differ on two
    /// rearrangements of the same partition.
    #[error("not symmetric: coefficients of M{left} and M{right} differ")]
    NotSymmetric { left: Composition, right: Composition },

    #[error("not in the span of the requested basis: {0}")]
    NotInSpan(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("triple is not flippable in this heap")]
    NotFlippable,

    #[error("cross-check disagreement: {0}")]
    Disagreement(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),
}
