use thiserror::Error;

/// Error type shared by all modules of this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An input failed a documented precondition or invariant check.
    #[error("validation error: {0}")]
    Validation(String),

    /// A request was refused because it exceeds a documented size cap.
    #[error("refused: {0}")]
    Refused(String),

    /// A specification file could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
