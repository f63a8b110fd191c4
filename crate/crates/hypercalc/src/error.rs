use thiserror::Error;

/// Failures of the text-format layer and the seeded instance generator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IoError {
    /// The text does not match the format grammar. Lines are 1-based and
    /// count every physical line, comments included.
    #[error("line {line}: {detail}")]
    Parse { line: usize, detail: String },
    /// The text parsed but the described object violates a structural
    /// invariant (delegated to the constructors of the domain types).
    #[error("{detail}")]
    Validation { detail: String },
    /// A generator request asks for more distinct hyperarcs than exist
    /// within the given bounds.
    #[error("infeasible parameters: requested {requested} hyperarcs, only {feasible} exist")]
    InfeasibleParams { requested: usize, feasible: u128 },
}

impl IoError {
    pub(crate) fn parse(line: usize, detail: impl Into<String>) -> IoError {
        IoError::Parse {
            line,
            detail: detail.into(),
        }
    }

    pub(crate) fn validation(detail: impl std::fmt::Display) -> IoError {
        IoError::Validation {
            detail: detail.to_string(),
        }
    }
}
