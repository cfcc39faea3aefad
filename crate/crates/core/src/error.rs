use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("part {part} exceeds the limit {limit}")]
    PartTooLarge { part: u64, limit: u64 },

    #[error("NotContained: gamma {gamma} is not contained in beta {beta}")]
    NotContained { gamma: String, beta: String },

    #[error("NotHorizontalStrip: row {row} has beta_i = {beta_i} > gamma_i + 1 = {bound}")]
    NotHorizontalStrip { row: usize, beta_i: u32, bound: u32 },

    #[error("invalid picket P{eps}^{m}")]
    InvalidPicket { eps: u8, m: u32 },

    #[error("IncomparableInvariants: (a, b) = ({a_left}, {b_left}) vs ({a_right}, {b_right})")]
    IncomparableInvariants {
        a_left: usize,
        b_left: usize,
        a_right: usize,
        b_right: usize,
    },

    #[error("NotInS1: object contains a P1^0 summand")]
    NotInS1,

    #[error("NotNilpotent: matrix of size {size} is not nilpotent")]
    NotNilpotent { size: usize },

    #[error("invalid field parameter p = {p} (supported primes: 2, 3, 5, 7)")]
    InvalidField { p: u32 },

    #[error("SearchSpaceTooLarge: dimension {dim} exceeds the limit {limit}")]
    SearchSpaceTooLarge { dim: usize, limit: usize },

    #[error("size guard: total b = {b} exceeds the bound {bound}")]
    SizeGuard { b: usize, bound: usize },

    #[error("NonUniqueMinimum: {count} extensions share the minimal endomorphism dimension {end_dim}")]
    NonUniqueMinimum { count: usize, end_dim: usize },

    #[error("malformed matrix object: {0}")]
    MalformedObject(String),
}

pub type Result<T> = std::result::Result<T, Error>;
