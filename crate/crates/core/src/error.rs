use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("graph is bipartite; walk lengths between some pairs never stabilize")]
    BipartiteInput,

    #[error("walk lengths did not stabilize within bound {bound}")]
    NotStabilized { bound: usize },

    #[error("order {order} exceeds the cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("matrix is not symmetric (deviation {deviation:e})")]
    NonSymmetric { deviation: f64 },

    #[error("eigenvalue has imaginary part {imag:e}; input is not Hermitian")]
    NonRealEigenvalue { imag: f64 },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("interpolation nodes are not distinct (node {0} repeats)")]
    DuplicateNodes(f64),

    #[error("eigenvalue iteration failed to converge")]
    NoConvergence,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed edge list at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
