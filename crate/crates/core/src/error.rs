use thiserror::Error;

/// Errors raised by the constructions and analytic routes in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {0} outside supported range 2..=16")]
    DegreeOutOfRange(u32),
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("{family} codes require {requirement}, got {got}")]
    FamilyRange {
        family: &'static str,
        requirement: &'static str,
        got: u32,
    },
    #[error("generator polynomial does not divide T^{n} - 1")]
    GeneratorNotDivisor { n: usize },
    #[error("generator degree {degree} exceeds code length {n}")]
    GeneratorTooLarge { degree: usize, n: usize },
    #[error("enumeration needs 2^{k} codewords, above work limit {limit}")]
    WorkLimitExceeded { k: usize, limit: u64 },
    #[error("MacWilliams transform: coefficient of X^{index} is not divisible by code size")]
    NonExactDivision { index: usize },
    #[error("MacWilliams transform: coefficient of X^{index} is negative")]
    NegativeCoefficient { index: usize },
    #[error("code size must be a power of two equal to the enumerator total")]
    InvalidCodeSize,
    #[error("{0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("invalid discriminant {0}: must be negative and congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(i64),
    #[error("{0} is not a power of two 2^m with m >= 2")]
    NotTwoPower(u64),
    #[error("weight {index}: {reason}")]
    FormulaInconsistent { index: usize, reason: String },
    #[error("invalid polynomial string: {0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
