use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification of [`Error`], mainly for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// An argument is outside the mathematical domain of the operation.
    Domain,
    /// The value is representable exactly but not in floating point.
    Range,
    /// The request is valid but exceeds a deliberate resource guard.
    Resource,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Fibonacci index {0} is below the supported minimum of -1")]
    FibIndexBelowMin(i64),
    #[error("Lucas numbers are only defined here for indices >= 0, got {0}")]
    NegativeLucasIndex(i64),
    #[error("index {n} exceeds the float evaluation range (max {max})")]
    BinetRange { n: u64, max: u64 },
    #[error("rational with zero denominator")]
    ZeroDenominator,
    #[error("device length must be at least 1")]
    EmptyDevice,
    #[error("cell index {index} outside 1..={length}")]
    CellOutOfRange { index: usize, length: usize },
    #[error("cell pair ({k}, {l}) is out of order for this operation")]
    UnorderedPair { k: usize, l: usize },
    #[error("cell index {k} outside the canonical half-range 2..={max} of a ring with {n} cells")]
    RingHalfRange { k: usize, n: usize, max: usize },
    #[error("ring of {n} cells is too small for this correlation form (needs n >= {min})")]
    RingTooSmall { n: usize, min: usize },
    #[error("state index {index} outside 0..{count}")]
    StateIndexOutOfRange { index: BigUint, count: BigUint },
    #[error("state word does not satisfy the device constraint")]
    InadmissibleState,
    #[error("invalid character {found:?} at position {position} in state word (expected 0 or 1)")]
    InvalidStateChar { position: usize, found: char },
    #[error("state word length {got} does not match device length {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("length {n} exceeds the exhaustive enumeration guard ({max})")]
    EnumerationLimit { n: usize, max: usize },
    #[error("length {n} exceeds the sampling limit ({max})")]
    SamplingLimit { n: usize, max: usize },
    #[error("sample count must be at least 1")]
    EmptySample,
    #[error("draw index {index} outside the configured sample count {count}")]
    DrawIndexOutOfRange { index: u64, count: u64 },
    #[error("verification sweep bound {requested} exceeds the hard cap ({max})")]
    VerifyLimit { requested: usize, max: usize },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::BinetRange { .. } => ErrorKind::Range,
            Error::EnumerationLimit { .. }
            | Error::SamplingLimit { .. }
            | Error::VerifyLimit { .. } => ErrorKind::Resource,
            _ => ErrorKind::Domain,
        }
    }
}
