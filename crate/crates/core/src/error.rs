use thiserror::Error;

use crate::ring::RingId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingId, right: RingId },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid symbol {symbol:?} for {ring} at position {position}")]
    InvalidSymbol { ring: RingId, symbol: char, position: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("element {code:X} of {ring} is not involutory")]
    NotInvolutory { ring: RingId, code: u8 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("code is not self-dual")]
    NotSelfDual,

    #[error("dimension {k} exceeds the full-enumeration limit {limit}; use low-weight enumeration")]
    EnumerationLimit { k: usize, limit: usize },

    #[error("enumeration of {estimated} candidates exceeds budget {budget}")]
    BudgetExceeded { estimated: u128, budget: u128 },

    #[error("indeterminate: {0}")]
    Indeterminate(String),

    #[error("weight distribution lies outside the published families: {0}")]
    OutsideFamilies(String),

    #[error("generator file line {line}: {message}")]
    GeneratorFile { line: usize, message: String },

    #[error("catalog: {0}")]
    Catalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
