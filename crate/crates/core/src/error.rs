use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An input violates an operation's domain (symbol out of range, word too short, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Parameters are inconsistent or insufficient for the requested check.
    #[error("configuration error: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
