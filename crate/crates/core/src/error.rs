use thiserror::Error;

use crate::design::Family;

#[derive(Debug, Error)]
pub enum Error {
    #[error("m = {m} is outside the range [{min}, {max}] for family {family}")]
    MOutOfRange {
        family: Family,
        m: u32,
        min: u32,
        max: u32,
    },

    #[error("invalid strength t = {t}: {reason}")]
    InvalidStrength { t: u32, reason: String },

    #[error("invalid reference weight u = {u}: {reason}")]
    InvalidWeight { u: u64, reason: String },

    #[error("length {0} is not a positive multiple of 8 within the supported cap")]
    InvalidLength(u64),

    #[error("minimum-weight codeword count {count} at length {n} is not positive")]
    NonPositiveBlockCount { n: u64, count: String },

    #[error("lambda_{s} = {value} is not a nonnegative integer")]
    LambdaNotIntegral { s: usize, value: String },

    #[error("moment A_{s} = {value} is not a nonnegative integer")]
    MomentNotIntegral { s: usize, value: String },

    #[error("offsets must be strictly increasing nonnegative even integers: {0:?}")]
    InvalidOffsets(Vec<i64>),

    #[error("moment vector has {have} entries, need at least {need}")]
    ShortMomentVector { have: usize, need: usize },

    #[error("division {numer} / {denom} is not exact")]
    InexactDivision { numer: String, denom: String },

    #[error("linear system is singular")]
    Singular,

    #[error("linear system is underdetermined: {unknowns} unknowns, {equations} equations")]
    Underdetermined { unknowns: usize, equations: usize },

    #[error("solution violates moment equation s = {s}")]
    Inconsistent { s: usize },

    #[error("non-integral coefficient in extremal enumerator of length {n} at weight {weight}")]
    NonIntegralEnumerator { n: u64, weight: u64 },

    #[error("result store: {0}")]
    Store(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
