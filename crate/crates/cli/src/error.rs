use std::process::ExitCode;

use thiserror::Error;

/// Every failure maps to one named exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("recipe rejected: {0}")]
    RecipeInvalid(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Success = 0,
    VerificationFailed = 1,
    Usage = 2,
    RecipeInvalid = 3,
    Construction = 4,
    Io = 5,
}

impl From<Exit> for ExitCode {
    fn from(e: Exit) -> Self {
        ExitCode::from(e as u8)
    }
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::RecipeInvalid(_) => Exit::RecipeInvalid,
            CliError::Construction(_) => Exit::Construction,
            CliError::VerificationFailed(_) => Exit::VerificationFailed,
            CliError::Io(_) => Exit::Io,
        }
    }
}

/// Wraps a library error as a construction failure.
pub fn construction<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Construction(e.to_string())
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}
