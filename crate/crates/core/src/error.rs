use thiserror::Error;

/// Failures raised by builders, the container construction and the oracles.
///
/// The variants line up with the CLI exit-code contract: `Input`,
/// `Precondition` and `LimitExceeded` are caller mistakes (exit 2), `Contract`
/// signals that a proved guarantee did not hold (exit 1).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("exhaustive limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// Exit code used by the command-line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Contract(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
