use thiserror::Error;

/// Errors produced by graph construction, parsing, and the resource guards.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte position of the offending byte.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// A construction would exceed the 64-vertex capacity.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An argument violates a documented precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A resource guard tripped (face-count limit, recursion width, enumeration guard).
    #[error("resource limit: {0}")]
    Resource(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
