//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {context}: expected {expected}, got {actual}")]
    ShapeMismatch {
        context: String,
        expected: String,
        actual: String,
    },

    #[error("non-finite value in {context}{}", index.map(|i| format!(" at index {i}")).unwrap_or_default())]
    NonFinite {
        context: String,
        index: Option<usize>,
    },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty dataset")]
    EmptyDataset,

    #[error("{0}")]
    Runtime(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn shape(context: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            context: context.into(),
            expected: expected.into(),
            actual: actual.into(),
        }
    }

    pub fn non_finite(context: impl Into<String>, index: Option<usize>) -> Self {
        Error::NonFinite {
            context: context.into(),
            index,
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors that indicate bad inputs rather than a failed run:
    /// the CLI maps these to exit code 1, everything else to 2.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::ShapeMismatch { .. }
                | Error::InvalidConfig(_)
                | Error::Parse { .. }
                | Error::EmptyDataset
        )
    }
}
