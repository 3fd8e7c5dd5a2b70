use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("map is singular")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),

    /// A supplied structure fails one of its defining laws.
    #[error("invalid {what}: law {law} fails")]
    Invalid { what: String, law: String, report: Box<Report> },

    /// A theorem's hypothesis does not hold; the theorem is not applicable.
    #[error("hypothesis failed: {name}")]
    HypothesisFailed { name: String, report: Box<Report> },

    /// A conclusion guaranteed by a theorem failed. Only reachable through an
    /// implementation bug.
    #[error("theorem violation: {name}")]
    TheoremViolation { name: String, report: Box<Report> },
}

impl Error {
    pub fn report(&self) -> Option<&Report> {
        match self {
            Error::Invalid { report, .. }
            | Error::HypothesisFailed { report, .. }
            | Error::TheoremViolation { report, .. } => Some(report),
            _ => None,
        }
    }
}
