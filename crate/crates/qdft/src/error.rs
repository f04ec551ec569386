use std::io;

use thiserror::Error;

/// Failures of a CLI run, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Numerical(String),

    #[error("cannot write report: {0}")]
    Io(#[from] io::Error),

    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),

    #[error("cannot write JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn usage(e: qdft_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }

    pub(crate) fn numerical(e: qdft_core::Error) -> Self {
        CliError::Numerical(e.to_string())
    }
}
