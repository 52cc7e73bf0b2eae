//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by fitting, scoring and I/O operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A value outside its mathematical domain (non-positive-definite
    /// covariance, proportions that do not sum to one, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Mismatched dimensions between data and parameters.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A component's total responsibility fell below the empty-cluster
    /// threshold during an M-step; the surrounding restart is discarded.
    #[error("cluster {index} collapsed: total responsibility {weight:.3e} below threshold")]
    DegenerateCluster { index: usize, weight: f64 },

    /// Fewer observations than required (e.g. n < K at initialization).
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// Every EM restart ended in a degenerate state.
    #[error("all {attempted} restarts failed: {}", diagnostics.join("; "))]
    AllRestartsFailed {
        attempted: usize,
        diagnostics: Vec<String>,
    },

    /// A named column is absent from the CSV header.
    #[error("missing column '{0}' in header")]
    MissingColumn(String),

    /// A cell could not be parsed; locations are 1-based data rows.
    #[error("row {row}, column '{column}': {message}")]
    Parse {
        row: usize,
        column: String,
        message: String,
    },

    /// A feature column with zero variance cannot be standardized.
    #[error("feature column '{0}' has zero variance")]
    DegenerateFeature(String),

    /// The request itself is malformed (e.g. SICL without externals).
    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
