use num_bigint::BigInt;
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has nonzero trace {0}")]
    NonzeroTrace(Scalar),
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("vector has square norm {norm}, expected 2")]
    NotRealRoot { norm: BigInt },
    #[error("vector has square norm {norm}, expected 0")]
    NotIsotropic { norm: BigInt },
    #[error("zero vector is not allowed here")]
    ZeroVector,
    #[error("pair ({m}, {n}) is not coprime")]
    NotCoprime { m: BigInt, n: BigInt },
    #[error("invalid triple ({a}, {b}, {c}): {reason}")]
    InvalidTriple {
        a: BigInt,
        b: BigInt,
        c: BigInt,
        reason: &'static str,
    },
    #[error("matrix is not an isometry of the root lattice")]
    NotIsometry,
    #[error("isometry decomposition found no stabilizer candidate")]
    StabilizerMismatch,
    #[error("unknown generator token `{0}`")]
    UnknownToken(String),
    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("matrix is singular")]
    Singular,
    #[error("entry is not an integer: {0}")]
    NotIntegral(Scalar),
}

pub type Result<T> = std::result::Result<T, Error>;
