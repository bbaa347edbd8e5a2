use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps these onto process exit codes: budget exhaustion gets its own
/// code, everything else is an input error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty domain: at least one alternative is required")]
    EmptyDomain,

    #[error("unsupported number of alternatives {m} (supported range {min}..={max})")]
    UnsupportedSize { m: usize, min: usize, max: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("normalization error: node {0} has no neighbors")]
    Normalization(usize),

    #[error("perturbation error: {0}")]
    Perturbation(String),

    #[error("schedule error: {0}")]
    Schedule(String),

    #[error("inconsistent initialization: {0}")]
    Initialization(String),

    #[error("step budget of {0} exceeded")]
    Budget(usize),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
