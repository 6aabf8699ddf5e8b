use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("chain length must be at least 1 (closed forms are stated for n >= 1), got {0}")]
    InvalidChainLength(i64),

    #[error("graph construction check failed: {0}")]
    Construction(String),

    #[error("vertex `{text}` is not a vertex of O_{n}: {reason}")]
    VertexParse {
        text: String,
        n: u32,
        reason: String,
    },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular: zero pivot at elimination stage {stage}")]
    Singular { stage: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("principal minor order {order} out of range for dimension {dim}")]
    OrderOutOfRange { order: usize, dim: usize },

    #[error("brute-force minor enumeration capped at dimension {cap}, got {dim}")]
    EnumerationTooLarge { dim: usize, cap: usize },

    #[error("expected exactly one zero eigenvalue: {0}")]
    ZeroMultiplicity(String),

    #[error("diagonal entry {index} is zero or matrix is not diagonal")]
    NotInvertibleDiagonal { index: usize },

    #[error("resistance between a vertex and itself is undefined ({0})")]
    SameVertex(String),

    #[error(
        "graph has {edges} edges, over the deletion-contraction cap of {cap}; use the matrix-tree route"
    )]
    EdgeCapExceeded { edges: usize, cap: usize },

    #[error("{invariant}: route `{route_a}` gave {value_a} but route `{route_b}` gave {value_b}")]
    RouteDisagreement {
        invariant: String,
        route_a: String,
        value_a: String,
        route_b: String,
        value_b: String,
    },

    #[error("spanning tree product route produced a non-integer value {0}")]
    NonIntegerCount(String),

    #[error("unknown formula `{0}`")]
    UnknownFormula(String),

    #[error("cubic fit: {0}")]
    Fit(String),
}
