//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration (bad dimensions, bounds, thresholds, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Shape mismatch between vectors/matrices.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A computation produced a non-finite or otherwise unusable value.
    #[error("numerical error: {0}")]
    Numeric(String),

    /// Model fitting was requested without data.
    #[error("no model: {0}")]
    NoModel(String),

    /// Iterative training failed.
    #[error("training diverged at epoch {epoch}: {message}")]
    Training { epoch: usize, message: String },

    /// Scenario or snapshot file could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
