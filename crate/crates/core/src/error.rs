use thiserror::Error;

use crate::exponent::ExponentAnalysis;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix must be square with dimension >= 1")]
    NotSquare,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),

    #[error("lattice generators are rank deficient")]
    RankDeficient,

    #[error("invalid generators: {0}")]
    InvalidGenerators(String),

    #[error("generators have gcd {0}, expected 1")]
    NotCoprime(u64),

    #[error("operation undefined for this semigroup: {0}")]
    Undefined(&'static str),

    #[error("{0} is not a member of the semigroup")]
    NotAMember(u64),

    #[error("membership data is not additively closed: {a} + {b} missing")]
    NotClosed { a: u64, b: u64 },

    #[error("characteristic polynomial is not integral")]
    NoIntegralSpectrum,

    #[error("determinant must be +1 or -1, got {0}")]
    NotUnimodular(String),

    #[error("state budget exhausted after {states} states")]
    StateBudgetExceeded {
        states: usize,
        partial: Box<ExponentAnalysis>,
    },

    #[error("certificate mismatch at exponent {0}")]
    CertificateMismatch(u64),

    #[error("the trivial semigroup has no superdiagonal representation; use [1/2]")]
    TrivialSemigroupUnrepresentableHere,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("construction failed verification")]
    VerificationFailed,

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
