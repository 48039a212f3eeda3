use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid conflict graph: {0}")]
    InvalidConflicts(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("{what} exceeds the configured limit of {limit}")]
    Capacity { what: String, limit: usize },

    #[error("formula is not clean: {0}")]
    NotClean(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("clause {clause} has width {width}, above the declared maximum {max}")]
    ClauseTooWide {
        clause: usize,
        width: usize,
        max: usize,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
