use thiserror::Error;

/// Validation and evaluation failures for function-space data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpaceError {
    #[error("length mismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("value at position {position} is not finite")]
    NotFinite { position: usize },
    #[error("invalid norm exponent p = {p}: need p >= 1 or p = infinity")]
    InvalidP { p: f64 },
    #[error("empty input")]
    EmptyInput,
    #[error("value at position {position} must be strictly positive, got {value}")]
    NonPositive { position: usize, value: f64 },
}
