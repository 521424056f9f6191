use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("episode already finished at step {step} (horizon {horizon})")]
    EpisodeFinished { step: usize, horizon: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("parse error in {path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("unsupported format version {found} in {path} (this build supports {supported})")]
    Version {
        path: String,
        found: String,
        supported: u32,
    },

    #[error("dataset invariant violated (episode {episode}, step {step}): {message}")]
    DatasetInvariant {
        episode: usize,
        step: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
