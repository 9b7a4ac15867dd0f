use thiserror::Error;

/// Errors raised by graph construction, index evaluation and resolving-set search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("trivial group excluded: order must be at least 2, got {0}")]
    TrivialGroup(u64),

    #[error("order {n} is below the minimum {min} required here")]
    OrderTooSmall { n: u64, min: u64 },

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("element {element} is not in Z_{n}")]
    InvalidElement { element: u64, n: u64 },

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph must have at least {0} vertices")]
    TooFewVertices(usize),

    #[error("instance too large for exact search: {order} vertices exceeds cap {cap}")]
    TooLarge { order: usize, cap: usize },

    #[error("formula domain violated: need n >= 2 and 1 <= s <= n - 1, got n = {n}, s = {s}")]
    Domain { n: u64, s: u64 },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
