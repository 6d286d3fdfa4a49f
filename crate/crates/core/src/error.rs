use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("content of the zero polynomial is undefined")]
    ZeroContent,
    #[error("matrix selection error: {0}")]
    Selection(String),
    #[error("matrix shape error: {0}")]
    Shape(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("unsupported height c = {0}; only c = 2 is implemented for Rees equations")]
    UnsupportedHeight(usize),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
