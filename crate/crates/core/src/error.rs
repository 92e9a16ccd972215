use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid simple type {0}")]
    InvalidType(String),
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i32>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u32),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("invalid isogeny datum: {0}")]
    InvalidDatum(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not implemented: {0}")]
    NotImplemented(String),
}

pub type Result<T> = std::result::Result<T, Error>;
