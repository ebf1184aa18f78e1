use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map one-to-one onto the CLI exit codes: `Usage` and `Parse`
/// are caller mistakes, `ResourceLimit` is a refused computation, and
/// `Contract` signals an internal inconsistency (a bug, not bad input).
#[derive(Debug, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("inadmissible specialization point: {0}")]
    Inadmissible(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Returns early with a domain error.
macro_rules! domain {
    ($($arg:tt)*) => { return Err($crate::error::Error::Domain(format!($($arg)*))) };
}
pub(crate) use domain;
