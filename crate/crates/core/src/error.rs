use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid scalar {text:?}: {reason}")]
    Scalar { text: String, reason: String },

    #[error("tensor of length {len} is not a {dim}x{dim}x{dim} cube")]
    Shape { dim: usize, len: usize },

    #[error("not commutative at (e{i}, e{j})")]
    NotCommutative { i: usize, j: usize },

    #[error("not skew-symmetric at (e{i}, e{j})")]
    NotSkew { i: usize, j: usize },

    #[error("unknown identity kind {0:?}")]
    UnknownIdentity(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{family}: constraint violated: {polynomial} = {value} (must be 0)")]
    Constraint {
        family: String,
        polynomial: String,
        value: String,
    },

    #[error("unknown catalog family {0:?}")]
    UnknownFamily(String),

    #[error("{family}: unknown parameter {name:?} (expected one of: {expected})")]
    UnknownParameter {
        family: String,
        name: String,
        expected: String,
    },

    #[error("series of order {found} used with a deformation of order {expected}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("deformation hypothesis {which} fails: {detail}")]
    Hypothesis { which: String, detail: String },

    #[error("invalid algebra file: {0}")]
    Format(String),

    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
