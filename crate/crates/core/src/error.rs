//! Error types shared across the crate.

use thiserror::Error;

/// Coarse classification used by callers (notably the CLI) to map an error
/// onto an exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// The caller misused the API: mismatched carriers, malformed input,
    /// an operation requested on an unsupported carrier.
    Usage,
    /// The input is well-formed but outside the operation's domain
    /// (e.g. a non-CP matrix fed to a decomposition).
    Domain,
    /// A configured limit was hit: determinant cap, search budget.
    Resource,
    /// An invariant the library guarantees was violated; a bug.
    Internal,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("carrier mismatch: expected {expected} value, found {found}")]
    CarrierMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("invalid {carrier} value: {reason}")]
    InvalidValue {
        carrier: &'static str,
        reason: String,
    },

    #[error("invalid lattice table: {0}")]
    InvalidLattice(String),

    #[error("residual undefined: {x} is not below {y}")]
    ResidualUndefined { x: String, y: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("matrix is not symmetric: entries ({i},{j}) and ({j},{i}) differ")]
    NotSymmetric { i: usize, j: usize },

    #[error("matrix is not completely positive: principal 2x2 witness ({i},{j})")]
    NotCompletelyPositive { i: usize, j: usize },

    #[error("operation requires a {requirement} carrier, got {carrier}")]
    UnsupportedCarrier {
        requirement: &'static str,
        carrier: &'static str,
    },

    #[error("index set {0} out of bounds for the matrix")]
    IndexOutOfBounds(String),

    #[error("matrix side {side} exceeds the permutation-sum cap {cap}")]
    DeterminantCap { side: usize, cap: usize },

    #[error("search limit exceeded: {0}")]
    SearchLimit(String),

    #[error("a seed is required for sampled law checking")]
    SeedRequired,

    #[error("{path}: {reason}")]
    Parse { path: String, reason: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::CarrierMismatch { .. }
            | Error::InvalidValue { .. }
            | Error::InvalidLattice(_)
            | Error::NotSquare { .. }
            | Error::DimensionMismatch(_)
            | Error::AlgebraMismatch
            | Error::UnsupportedCarrier { .. }
            | Error::IndexOutOfBounds(_)
            | Error::SeedRequired
            | Error::Parse { .. } => ErrorClass::Usage,
            Error::ResidualUndefined { .. }
            | Error::NotSymmetric { .. }
            | Error::NotCompletelyPositive { .. } => ErrorClass::Domain,
            Error::DeterminantCap { .. } | Error::SearchLimit(_) => ErrorClass::Resource,
            Error::Internal(_) => ErrorClass::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
