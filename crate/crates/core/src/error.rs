use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order must be at least 1, got {0}")]
    ZeroOrder(i64),

    #[error("gcd(q, s) must be 1 (q = {q}, s = {s:?})")]
    GcdViolation { q: i64, s: Vec<i64> },

    #[error("the even sublattice D2 is only defined for the Sp(2) family")]
    IllegalEvenSublattice,

    #[error("expected a vector of length {expected}, got length {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weights of SU(n+1) must have coordinates summing to zero")]
    NonZeroSum,

    #[error("invalid rank {n} for family {family}")]
    InvalidRank { family: &'static str, n: usize },

    #[error("rational form is only available for the untwisted lattice (u = 0), got u = {0}")]
    AffineUnsupported(i64),

    #[error("exact cyclotomic evaluation produced a non-integral coefficient at index {0}")]
    NonIntegralCoefficient(usize),

    #[error("lattice family {lattice} does not match space family {space}")]
    FamilyMismatch { lattice: String, space: String },

    #[error("cannot compare lattices of rank {0} and {1}")]
    RankMismatch(usize, usize),

    #[error("unknown output format '{0}'")]
    UnknownFormat(String),

    #[error("invalid space '{0}'")]
    InvalidSpace(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("integer overflow while {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
