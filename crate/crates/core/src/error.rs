use std::path::PathBuf;

use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0} is not an edge of the parent graph")]
    ForeignEdge(Edge),

    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),

    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),

    #[error("{path}:{line}: {source}")]
    AtLine {
        path: String,
        line: usize,
        #[source]
        source: Box<GraphError>,
    },

    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl GraphError {
    /// True for errors caused by solver or oracle size limits.
    pub fn is_bound(&self) -> bool {
        match self {
            GraphError::BoundExceeded { .. } => true,
            GraphError::AtLine { source, .. } => source.is_bound(),
            _ => false,
        }
    }

    /// True for errors caused by unparseable input.
    pub fn is_parse(&self) -> bool {
        match self {
            GraphError::MalformedGraph6(_)
            | GraphError::MalformedEdgeList(_)
            | GraphError::Graph6TooLarge(_)
            | GraphError::SelfLoop(_)
            | GraphError::VertexOutOfRange { .. } => true,
            GraphError::AtLine { source, .. } => source.is_parse(),
            _ => false,
        }
    }
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
