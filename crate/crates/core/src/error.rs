use thiserror::Error;

/// Errors shared by all solver modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point {index} has a non-finite coordinate")]
    NonFiniteCoordinate { index: usize },
    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("vertex {vertex} out of range for a graph on {len} vertices")]
    VertexOutOfRange { vertex: usize, len: usize },
    #[error("graph has isolated vertices: {0:?}")]
    IsolatedVertices(Vec<usize>),
    #[error("independent-set member {vertex} has no neighbor, so total domination is undefined")]
    IsolatedMember { vertex: usize },
    #[error("subset {subset} contains element {element} outside the universe")]
    UnknownElement { subset: usize, element: usize },
    #[error("the subsets do not cover the universe")]
    Uncoverable,
    #[error("instance size {actual} exceeds the search limit {limit}")]
    SizeLimit { actual: usize, limit: usize },
    #[error("set is not dominating: vertex {vertex} is uncovered")]
    NotDominating { vertex: usize },
    #[error("assignment is not a valid input for this mapping")]
    InvalidAssignment,
    #[error("no instance without isolated vertices found after {attempts} attempts")]
    RetryExhausted { attempts: usize },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
