use hypercalc_core::OrientedHypergraph;
use hypercalc_spaces::{HyperarcFunction, VertexFunction, WeightAssignment};

use crate::error::OperatorError;

pub(crate) fn expect_len(expected: usize, got: usize) -> Result<(), OperatorError> {
    if expected != got {
        return Err(OperatorError::LengthMismatch { expected, got });
    }
    Ok(())
}

/// Checks that the weight tables cover the hypergraph.
pub(crate) fn expect_weights(
    h: &OrientedHypergraph,
    w: &WeightAssignment,
) -> Result<(), OperatorError> {
    expect_len(h.vertex_count() as usize, w.vertex_count())?;
    expect_len(h.hyperarc_count(), w.hyperarc_count())
}

pub(crate) fn expect_vertex_fn(
    h: &OrientedHypergraph,
    f: &VertexFunction,
) -> Result<(), OperatorError> {
    expect_len(h.vertex_count() as usize, f.len())
}

pub(crate) fn expect_hyperarc_fn(
    h: &OrientedHypergraph,
    f: &HyperarcFunction,
) -> Result<(), OperatorError> {
    expect_len(h.hyperarc_count(), f.len())
}

/// Wraps raw output values, surfacing exponent/weight overflow as an error
/// instead of a panic.
pub(crate) fn vertex_result(values: Vec<f64>) -> Result<VertexFunction, OperatorError> {
    VertexFunction::new(values).map_err(|_| OperatorError::NonFiniteResult)
}

pub(crate) fn hyperarc_result(values: Vec<f64>) -> Result<HyperarcFunction, OperatorError> {
    HyperarcFunction::new(values).map_err(|_| OperatorError::NonFiniteResult)
}
