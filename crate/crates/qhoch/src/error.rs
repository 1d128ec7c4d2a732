use std::path::PathBuf;

use thiserror::Error;

/// Failures of the front end. Each carries a stable code and maps to a
/// process exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{context}: {message}")]
    Format { context: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qhoch_core::Error),
}

impl CliError {
    pub fn format(context: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Format { context: context.into(), message: message.into() }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io_error",
            CliError::Format { .. } => "malformed_input",
            CliError::Usage(_) => "invalid_config",
            CliError::Core(e) => e.code(),
        }
    }

    /// 3 for size guards, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        use qhoch_core::Error as E;
        match self {
            CliError::Core(E::DimensionGuard { .. } | E::HomSizeGuard { .. } | E::CompositionCap { .. }) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
