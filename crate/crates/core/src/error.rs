use thiserror::Error;

/// Errors returned by the library.
///
/// The three variants map onto distinct process exit codes in the CLI:
/// input problems, refused work, and internal consistency failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("refused: {0}")]
    Refusal(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn refusal(msg: impl Into<String>) -> Self {
        Error::Refusal(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
