use thiserror::Error;

/// Errors produced by constructions, predicates, and numerical checks.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed loop: {0}")]
    MalformedLoop(String),
    #[error("unsupported geometry: {0}")]
    UnsupportedGeometry(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("winding number is indeterminate: point {0} lies on the loop")]
    IndeterminateWinding(String),
    #[error("operator is not Fredholm: {0}")]
    NotFredholm(String),
    #[error("argument sampling failed: {0}")]
    SamplingFailure(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 1,
            Error::MalformedLoop(_)
            | Error::UnsupportedGeometry(_)
            | Error::Parameter(_)
            | Error::DivisionByZero
            | Error::IndeterminateWinding(_)
            | Error::Parse(_) => 2,
            Error::Capacity(_) => 3,
            Error::NotFredholm(_) | Error::SamplingFailure(_) | Error::Numerical(_) => 4,
            Error::Io(_) => 5,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
