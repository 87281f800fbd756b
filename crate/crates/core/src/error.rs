use thiserror::Error;

/// Errors produced by the kernel.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid variable set: {0}")]
    InvalidVariables(String),

    #[error("exponent vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("negative entry at position {index}")]
    NegativeEntry { index: usize },

    #[error("operands belong to different polynomial contexts")]
    ContextMismatch,

    #[error("polarization bound violated for {variable}: exponent {exponent} exceeds bound {bound}")]
    BoundViolated {
        variable: String,
        exponent: String,
        bound: String,
    },

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined for the unit ideal")]
    UnitIdeal,

    #[error("matching power index must be at least 1")]
    InvalidPower,

    #[error("complexity cap exceeded: {what} needs more than {limit} {unit}")]
    ComplexityCap {
        what: &'static str,
        limit: usize,
        unit: &'static str,
    },

    #[error("unsupported coefficient field: {0}")]
    UnsupportedField(String),

    #[error("value out of representable range: {0}")]
    Overflow(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
}

pub type Result<T> = std::result::Result<T, Error>;
