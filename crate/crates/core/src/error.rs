use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex id {id} out of range for n={n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph contains a triangle or a quadrangle")]
    NotTriangleQuadrangleFree,
    #[error("maximum degree {found} exceeds {limit}")]
    DegreeTooLarge { found: usize, limit: usize },
    #[error("malformed level sequence: {0}")]
    MalformedLevels(String),
    #[error("order out of range: {0}")]
    OrderOutOfRange(String),
    #[error("order {n} exceeds the scale guard ({limit}); override the guard to proceed")]
    ScaleGuard { n: usize, limit: usize },
    #[error("invalid phi function: {0}")]
    InvalidPhi(String),
    #[error("no tree satisfies the request")]
    NoCandidates,
    #[error("unknown name `{0}`")]
    UnknownName(String),
}
