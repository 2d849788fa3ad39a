//! Crate-wide error type. The CLI maps `Input` and `Validation` to exit
//! code 2 and `Resource` to exit code 3.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range caller input.
    #[error("input error: {0}")]
    Input(String),

    /// An enumeration or search would exceed its budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A weight family failed coherence or normalization checks.
    #[error("measure validation failed at {label} (level {level}): residual {residual}")]
    Validation {
        level: usize,
        label: String,
        residual: String,
    },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
