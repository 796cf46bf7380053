use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("missing color: {0}")]
    MissingColor(String),

    #[error("color name `{0}` is used both as a vertex color and an edge color")]
    NamespaceCollision(String),

    #[error("bad edge: {0}")]
    BadEdge(String),

    #[error("vertices must differ (got {0} twice)")]
    SameVertex(usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("removing the given vertices does not leave a path")]
    Disconnects,

    #[error("{n} vertices exceeds the configured bound of {bound}")]
    TooLarge { n: usize, bound: usize },

    #[error("dihedral element does not preserve the coloring")]
    NotASymmetry,

    #[error("bad length {m}: {reason}")]
    BadLength { m: usize, reason: &'static str },

    #[error("paths have different vertex counts ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("search space of {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("expected a {expected}, found a {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },

    #[error("{0} requires an explicit opt-in")]
    NeedsOptIn(&'static str),

    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
