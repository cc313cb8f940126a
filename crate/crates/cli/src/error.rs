//! Command errors and their exit codes.

use novikov_core::{Error, IdentityReport};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// A failed precondition is an identity failure, reported like one.
    pub fn failed_report(&self) -> Option<(&str, &IdentityReport)> {
        match self {
            CliError::Core(Error::Precondition { what, report }) => Some((what, report)),
            _ => None,
        }
    }
}
