use thiserror::Error;

/// Errors from core state and flow operations.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("batch must be at least 1x1, got {batch}x{dim}")]
    EmptyBatch { batch: usize, dim: usize },

    #[error("non-finite entry at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("time {t} outside [0, 1]")]
    TimeOutOfRange { t: f64 },

    #[error("time {t} outside the score-safe range (0, {max}]")]
    ScoreTimeOutOfRange { t: f64, max: f64 },

    #[error("invalid time grid: {reason}")]
    InvalidGrid { reason: String },
}
