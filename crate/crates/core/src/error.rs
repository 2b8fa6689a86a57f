use alloc::string::String;

use thiserror::Error;

use crate::algebra::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different variable universes")]
    UniverseMismatch,
    #[error("a universe needs at least one x-variable")]
    EmptyXBlock,
    #[error("{0} x/y variables exceed the supported slot count")]
    TooManyVariables(usize),
    #[error("variable list is not in canonical dense order")]
    BadVariableList,
    #[error("substitution produced a zero denominator")]
    ZeroDenominator,
    #[error("specializing {0} at zero hits a pole")]
    Pole(Var),
    #[error("negative exponent of non-Laurent variable {0}")]
    NegativeExponent(Var),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComboError {
    #[error("parts must be weakly decreasing and positive: {0}")]
    NotAPartition(String),
    #[error("cannot prepend a row of length {m} to a partition with first row {first}")]
    RowTooShort { m: u32, first: u32 },
    #[error("cell ({row}, {col}) lies outside the diagram")]
    CellOutside { row: usize, col: usize },
    #[error("multi-indices of lengths {0} and {1} are incomparable")]
    LengthMismatch(usize, usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Combo(#[from] ComboError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("coefficient of J_{lambda} is not in Z[q,t]: {detail}")]
    Integrality { lambda: String, detail: String },
    #[error("direct evaluation and closed form disagree for gamma={gamma}, alpha={alpha}")]
    DaijiMismatch { gamma: String, alpha: String },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
