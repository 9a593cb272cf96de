use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("variable x{0} is not assigned")]
    UnassignedVariable(u32),

    #[error("size mismatch: expected {expected}x{expected}, got {got}x{got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("polynomial is not homogeneous (degrees {0} and {1} both occur)")]
    NotHomogeneous(usize, usize),

    #[error("polynomial involves variable x{0}; a one-variable polynomial in x1 is required")]
    NotOneVariable(u32),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("not associative: (u{0} u{1}) u{2} != u{0} (u{1} u{2})")]
    NonAssociative(usize, usize, usize),

    #[error("unit law fails on basis element u{0}")]
    UnitLaw(usize),

    #[error("trace not symmetric: t(u{0} u{1}) != t(u{1} u{0})")]
    TraceAsymmetric(usize, usize),

    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("ideal is not stable under the trace: t(v{0}) = {1} is nonzero")]
    NotTraceStable(usize, String),

    #[error("trace is not n-CH for any n: {0}")]
    NotCayleyHamilton(String),

    #[error("no forced relation: all multiplicities are 1")]
    NoForcedRelation,

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("pseudocharacter axioms fail: {0}")]
    AxiomFailure(String),

    #[error("stratum types have different n ({0} vs {1})")]
    DegreeMismatch(usize, usize),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("exact division failed")]
    InexactDivision,

    #[error("invalid JSON input: {0}")]
    Json(String),
}
