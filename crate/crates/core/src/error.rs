use thiserror::Error;

use crate::report::IdentityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown placement {0:?}")]
    UnknownPlacement(String),
    /// A precondition that is itself an identity check did not hold.
    #[error("{what} does not hold")]
    Precondition { what: String, report: Box<IdentityReport> },
    #[error("identity table: {0}")]
    Table(String),
    /// Two independent evaluations of the same condition disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn precondition(what: impl Into<String>, report: IdentityReport) -> Self {
        Error::Precondition { what: what.into(), report: Box::new(report) }
    }
}
