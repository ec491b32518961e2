use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("colouring is missing vertex {0}")]
    IncompleteColouring(usize),

    #[error("improper partial colouring: edge {0}-{1} has overlapping colour sets")]
    ImproperPartial(usize, usize),

    #[error("time budget exhausted")]
    Timeout,

    #[error("state cap of {0} positions exceeded")]
    ResourceLimit(usize),

    #[error("protocol error: {0}")]
    Protocol(String),

    #[error("unknown catalog id `{0}`")]
    UnknownId(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
