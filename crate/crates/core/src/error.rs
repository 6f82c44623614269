use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("divisor must be monic nonconstant")]
    NonMonicDivisor,

    #[error("use sym_class for negative indices (got n = {0})")]
    NegativeIndex(i64),

    #[error("p must be prime (got {0})")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("field mismatch: p={left_p},g={left_g} vs p={right_p},g={right_g}")]
    FieldMismatch {
        left_p: u64,
        left_g: u32,
        right_p: u64,
        right_g: u32,
    },

    #[error("Laurent polynomial is not symmetric: coefficient of t^{exponent} is {coeff} but t^{mirror} has {mirror_coeff}")]
    Asymmetric {
        exponent: i64,
        coeff: BigInt,
        mirror: i64,
        mirror_coeff: BigInt,
    },

    #[error("Steinberg digit k_{position} = {digit} is outside 0..={max}")]
    InvalidDigit { position: usize, digit: i64, max: u64 },

    #[error("input must be square-free (gcd with derivative: {witness})")]
    NotSquareFree { witness: String },

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn not_square_free(witness: &IntPoly) -> Self {
        Error::NotSquareFree {
            witness: witness.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
