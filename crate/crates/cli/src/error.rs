use std::fmt;

/// Failures of the command-line front end, split by exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input or an invalid instance (exit status 1).
    Validation(String),
    /// The specialization is degenerate (exit status 2).
    Degenerate(String),
}

impl CliError {
    pub fn validation(msg: impl Into<String>) -> Self {
        CliError::Validation(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Degenerate(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "error: {m}"),
            CliError::Degenerate(m) => write!(f, "degenerate specialization: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<toric_core::Error> for CliError {
    fn from(e: toric_core::Error) -> Self {
        if e.is_degenerate() {
            CliError::Degenerate(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
