//! Error type shared across the engine.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("unsupported quiver type: {0}")]
    UnsupportedQuiver(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("objects belong to different quivers")]
    QuiverMismatch,

    #[error("window violation: Hom contribution at twist {twist} for pair ({x}, {y}) outside {{0, 1}}")]
    WindowViolation { x: String, y: String, twist: i64 },

    #[error("subcategory is not cluster tilting: {0}")]
    NotClusterTilting(String),

    #[error("unknown indecomposable id '{0}'")]
    UnknownObject(String),

    #[error("internal error: {0}")]
    Internal(String),
}
