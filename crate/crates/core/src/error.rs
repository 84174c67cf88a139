use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("input is not a tree ({0})")]
    NotATree(String),
    #[error("input graph is not connected")]
    NotConnected,

    #[error("enumeration budget of {cap} subgraphs exceeded")]
    BudgetExceeded { cap: usize },
    #[error("walk oracle limited to {max} edges, got {edges}")]
    OracleTooLarge { edges: usize, max: usize },
    #[error("eigensolver did not converge (residual {residual:e})")]
    NonConvergence { residual: f64 },
    #[error("non-integral result where an integer was required: {0}")]
    IntegralityViolation(String),

    #[error("graph is outside the Smith regime (spectral radius {radius})")]
    NotSmith { radius: f64 },
    #[error("invalid size {size} for family {family}")]
    InvalidSize { family: String, size: usize },
    #[error("vertices {u} and {v} are similar; coalescences would be isomorphic")]
    SimilarVertices { u: usize, v: usize },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
