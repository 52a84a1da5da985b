use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("Bloch vector has squared norm {norm_sq}, outside the unit ball")]
    InvalidBloch { norm_sq: f64 },

    #[error("{name} = {value} is outside its allowed range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("matrix is not a valid qubit state: {0}")]
    InvalidState(String),

    #[error("determinant {0} is negative; input is not a valid state")]
    NegativeDet(f64),

    #[error("Kraus operators violate completeness: residual {residual:e}")]
    IncompleteKraus { residual: f64 },

    #[error("channel has no Kraus operators")]
    EmptyChannel,

    #[error("matrix is not symmetric: asymmetry {0:e}")]
    NotSymmetric(f64),

    #[error("memory kernel value {0} lies outside [-1, 1]")]
    KernelOutOfRange(f64),

    #[error("config error in `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("unknown figure preset `{0}` (expected fig1..fig5)")]
    UnknownFigure(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
