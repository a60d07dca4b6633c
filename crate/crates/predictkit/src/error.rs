//! Error taxonomy shared across the crate.
//!
//! Every fallible operation returns [`enum@Error`]. The variants separate problems
//! the user can fix by editing the run configuration (`Config`), problems in
//! the input files (`Data`), mathematically undefined requests (`Domain`),
//! and estimation failures (`Singular`, `SampleSize`, `Degenerate`).

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The run configuration is inconsistent or incomplete.
    #[error("configuration error: {0}")]
    Config(String),

    /// An input file violates the panel contract. `locus` points at the
    /// offending file/row/column when known.
    #[error("data error at {locus}: {message}")]
    Data { locus: String, message: String },

    /// Input outside the mathematical domain of an operation
    /// (e.g. a return of -100% fed to a log transform).
    #[error("domain error: {0}")]
    Domain(String),

    /// The design matrix is rank deficient.
    #[error("singular design matrix: {0}")]
    Singular(String),

    /// Too few observations for the requested estimate.
    #[error("sample too small: need at least {need}, have {have}")]
    SampleSize { need: usize, have: usize },

    /// A statistic is undefined for this input (zero variance denominators
    /// and the like).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Operation not defined for this asset class.
    #[error("unsupported asset: {0}")]
    UnsupportedAsset(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn data(locus: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Data {
            locus: locus.into(),
            message: message.into(),
        }
    }
}
