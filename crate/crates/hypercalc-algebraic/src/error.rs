use thiserror::Error;

/// Errors from matrix and tensor encodings and tensor decoding.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraicError {
    /// `entry_value` needs 2 ≤ n ≤ order.
    #[error("entry value undefined for {n} distinct vertices at order {order}")]
    InvalidArity { n: usize, order: usize },
    /// The encoding would enumerate more tuples than the guard allows.
    #[error("tuple enumeration estimate {estimated} exceeds the 10^7 guard")]
    TooLarge { estimated: u64 },
    /// Decoding refuses tensors beyond order 8.
    #[error("tensor order {order} exceeds the decoding guard of 8")]
    OrderTooLarge { order: usize },
    /// Encoding needs at least one hyperarc/hyperedge to fix the order.
    #[error("cannot encode a hypergraph without hyperarcs or hyperedges")]
    EmptyHypergraph,
    /// The tensor cannot have been produced by any encoding.
    #[error("malformed tensor: {detail}")]
    MalformedTensor { detail: String },
    /// Strict decoding stalled with several consistent interpretations.
    #[error("ambiguous tensor: {} candidate partitions remain unresolved", candidates.len())]
    AmbiguousTensor { candidates: Vec<(Vec<u32>, Vec<u32>)> },
    /// Greedy decoding exhausted every guess without a consistent result.
    #[error("no consistent hypergraph reproduces the tensor")]
    NoConsistentHypergraph,
    /// An unoriented tensor's entries contradict its own hyperedge set.
    #[error("tensor entries are inconsistent with the collected hyperedges")]
    Inconsistent,
    /// `index_count` is only stated for n ∈ {max_a − 1, max_a}.
    #[error("index count undefined for {n} vertices at maximum cardinality {max_a}")]
    OutOfLemmaRange { n: usize, max_a: usize },
}
