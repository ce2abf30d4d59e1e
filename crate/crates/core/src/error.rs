use thiserror::Error;

/// Errors raised by graph construction, measurement and verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph of order {n} exceeds the canonical-form cap of {cap}")]
    CanonicalCap { n: usize, cap: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not unicyclic")]
    NotUnicyclic,

    #[error("{edges} edges exceed the brute-force budget of {budget}")]
    EdgeBudget { edges: usize, budget: usize },

    #[error("parameters out of range: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("non-integral value {0} where an integer was required")]
    NonIntegral(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
