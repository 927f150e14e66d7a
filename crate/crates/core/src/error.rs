use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("{{{u}, {v}}} is not an edge")]
    MissingEdge { u: usize, v: usize },

    #[error("edge {{{u}, {v}}} already present")]
    EdgeExists { u: usize, v: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("operation needs at least one vertex")]
    EmptyGraph,

    #[error("matrix is not symmetric: |m[{row}][{col}] - m[{col}][{row}]| = {diff:e}")]
    NotSymmetric { row: usize, col: usize, diff: f64 },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("orientation does not match the edge set: {0}")]
    Orientation(String),

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
}
