//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong while building, transforming or checking
/// geometries and groups.
#[derive(Debug, Error)]
pub enum Error {
    /// An incidence structure violates a structural invariant
    /// (dangling id, bad type, self-incidence, same-type incidence, ...).
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    /// A presentation or word refers to a generator that does not exist,
    /// or is otherwise malformed.
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    /// Coset enumeration ran out of room even after a lookahead pass.
    #[error("coset enumeration overflow: more than {limit} cosets required")]
    Overflow {
        /// The coset ceiling that was hit.
        limit: usize,
    },

    /// A combinatorial search exceeded its configured ceiling.
    #[error("size limit exceeded: {what} exceeds {limit}")]
    SizeLimitExceeded {
        /// What was being counted.
        what: &'static str,
        /// The configured ceiling.
        limit: usize,
    },

    /// A leaf-based operation was asked for a pair that is not a leaf of the
    /// diagram.
    #[error("({0},{1}) is not a leaf of the diagram")]
    NotALeaf(usize, usize),

    /// A bipartite-only operation was given a non-bipartite graph.
    #[error("graph is not bipartite")]
    NotBipartite,

    /// A precondition of a construction does not hold.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// A parameter combination has no closed form (degenerate or excluded).
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    /// A computed object violates a property it is known to have; this
    /// signals a defect rather than bad input.
    #[error("property violation: {0}")]
    PropertyViolation(String),

    /// A file could not be read or written.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialisation failed.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
