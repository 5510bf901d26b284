use thiserror::Error;

use crate::algebra::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("an algebra needs at least one element")]
    Empty,
    #[error("order {0} exceeds the supported maximum of {max}", max = crate::algebra::MAX_ORDER)]
    TooLarge(usize),
    #[error("invalid element label `{0}` (labels must be non-empty and free of whitespace, ',' and '#')")]
    InvalidLabel(String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("{table} table: {detail}")]
    Dimension { table: &'static str, detail: String },
    #[error("zero element `{0}` must be listed first")]
    ZeroNotFirst(String),
    #[error("{0}")]
    Axioms(AxiomReport),
    #[error("algebra of order {order} exceeds the enumeration bound {bound}; raise it with B1A_ENUM_BOUND")]
    BoundExceeded { order: usize, bound: usize },
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("ideal {{{0}}} is not saturated: {1}")]
    NotSaturated(String, String),
    #[error("ideal {{{0}}} is not radical: {1}")]
    NotRadical(String, String),
    #[error("ideal must be proper, got the whole algebra")]
    WholeAlgebra,
    #[error("unknown builtin algebra `{0}`")]
    UnknownBuiltin(String),
    #[error("chain algebra needs at least 2 elements, got {0}")]
    ChainTooShort(usize),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("missing directive: {0}")]
    MissingDirective(&'static str),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
