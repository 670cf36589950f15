use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid bit {value} at position {index}: expected 0 or 1")]
    InvalidBit { index: usize, value: u8 },

    #[error("2-adic valuation of 0 is undefined")]
    UndefinedValuation,

    #[error("{nv} variables exceeds the limit of {max}")]
    TooManyVars { nv: u32, max: u32 },

    #[error("variable index {index} out of range for {nv} variables")]
    VarIndexOutOfRange { index: u32, nv: u32 },

    #[error("cannot split the truth table of a 0-variable function")]
    CannotSplit,

    #[error("operand does not fit in a half table of {nv} variables")]
    HalfOverflow { nv: u32 },

    #[error("truth table out of range: requires TT < 2^(2^{nv})")]
    TruthTableOutOfRange { nv: u32 },

    #[error("assignment has {got} values, expected {expected}")]
    AssignmentLength { expected: usize, got: usize },

    #[error("malformed decision tree: {0}")]
    MalformedBdd(String),

    #[error("not in the image of the enumeration: {0}")]
    OutOfImage(String),

    #[error("parse error: {0}")]
    Parse(String),
}
