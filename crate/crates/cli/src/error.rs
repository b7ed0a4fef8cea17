use std::path::PathBuf;

use jumploci_core::Error as CoreError;
use thiserror::Error;

use crate::session::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    /// A cross-check that should hold by construction failed.
    #[error("check failed: {0}")]
    Check(String),
}

impl CliError {
    /// 1 for bad input, 2 for failed internal assertions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => 2,
            CliError::Check(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
