use thiserror::Error;

/// Failures raised by operator evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error("length mismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid p-Laplacian exponent p = {p}: need finite p > 1")]
    InvalidP { p: f64 },
    #[error("the explicit closed form is only defined for the default (Mirror/reciprocal) modes; use the composed method instead")]
    UnsupportedMode,
    #[error("operation requires a normal graph: some hyperarc side has more than one vertex")]
    NotAGraph,
    #[error("operator exponent {name} is not finite")]
    NotFinite { name: &'static str },
    #[error("operator produced a non-finite value (weight/exponent overflow)")]
    NonFiniteResult,
}
