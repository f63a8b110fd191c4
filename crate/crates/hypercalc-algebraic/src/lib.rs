//! Algebraic representations of hypergraphs: incidence and adjacency
//! matrices, and sparse adjacency tensors with exact rational entries.
//!
//! The tensor of an oriented hypergraph has order max_a (the largest
//! hyperarc cardinality) or max_a + 2 in the increased-order variant; the
//! tensor of an unoriented hypergraph has order max_e. A hyperarc (out, in)
//! marks every tuple that splits into a surjective prefix over `out` and a
//! surjective suffix over `in`; a hyperedge marks every surjective tuple
//! over its members. Each marked tuple carries the hyperarc's share — n/2
//! in [`EntryMode::Simplified`], n divided by the number of marked tuples
//! per hyperarc in [`EntryMode::Full`] — and shares add where hyperarcs
//! overlap.
//!
//! Law sheet (all checked by tests):
//!
//! | law | statement |
//! |-----|-----------|
//! | graph reduction | the order-2 tensor of a normal graph is its adjacency matrix |
//! | entry counts | a hyperarc of cardinality max_a or max_a − 1 owns exactly [`index_count`] entries |
//! | roundtrip | [`decode_tensor_oriented`] inverts [`encode_tensor_oriented`]; increased order always decodes, standard order whenever strict decoding succeeds |
//! | collision | distinct hypergraphs can share a standard-order tensor; strict decoding then reports the ambiguity |
//! | verification | every decode result re-encodes to its input ([`verify_decode_oriented`]) |
//!
//! Decoding never guesses silently: [`DecodeStrategy::Strict`] fails on
//! ambiguity with the surviving candidates, [`DecodeStrategy::Greedy`]
//! searches deterministically and still verifies by re-encoding. Decoded
//! hyperarcs come back in canonical sorted order; the encoding forgets the
//! original listing order.
//!
//! Entries are exact `i64` rationals throughout — no floating point.

mod decode;
mod error;
mod matrix;
mod tensor;

pub use decode::{
    decode_tensor_oriented, decode_tensor_unoriented, index_count, verify_decode_oriented,
    verify_decode_unoriented, DecodeStrategy,
};
pub use error::AlgebraicError;
pub use matrix::{
    adjacency_matrix_oriented, adjacency_matrix_unoriented, incidence_matrix_oriented,
    incidence_matrix_unoriented, AdjacencyMatrix, IncidenceMatrix,
};
pub use tensor::{
    encode_tensor_oriented, encode_tensor_unoriented, entry_value, EntryMode, Rational,
    SparseAdjacencyTensor,
};
