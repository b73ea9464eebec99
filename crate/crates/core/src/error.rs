use alloc::string::String;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}-{1}")]
    UnknownEdge(VertexId, VertexId),
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("graph has {got} vertices, limit is {limit}")]
    SizeLimit { got: usize, limit: usize },
    #[error("work limit exceeded")]
    WorkLimit,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: &str) -> Result<T> {
    Err(Error::Precondition(String::from(msg)))
}

pub(crate) fn invalid<T>(msg: &str) -> Result<T> {
    Err(Error::Invalid(String::from(msg)))
}

pub(crate) fn bad_param<T>(msg: &str) -> Result<T> {
    Err(Error::InvalidParam(String::from(msg)))
}
