use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid generator spec `{spec}`: {msg}")]
    Generator { spec: String, msg: String },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("induced subgraph is not a forest")]
    NotAForest,

    #[error("{what}: graph on {n} vertices exceeds budget of {limit}")]
    Budget {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    /// An internal audit failed. Always a bug.
    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::VertexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::Parse { .. }
            | Error::Generator { .. }
            | Error::EmptyGraph
            | Error::Io(_)
            | Error::Json(_) => 2,
            Error::Budget { .. } => 3,
            Error::NotAForest | Error::Contract(_) | Error::Invariant(_) => 4,
        }
    }
}
