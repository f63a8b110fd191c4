use hypercalc_core::VertexId;

use crate::error::SpaceError;

fn check_finite(values: &[f64]) -> Result<(), SpaceError> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(position) => Err(SpaceError::NotFinite { position: position + 1 }),
        None => Ok(()),
    }
}

/// A real-valued function on the vertices of a hypergraph: position `i`
/// holds the value at `v_{i+1}`. All values are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexFunction {
    values: Vec<f64>,
}

impl VertexFunction {
    pub fn new(values: Vec<f64>) -> Result<Self, SpaceError> {
        check_finite(&values)?;
        Ok(VertexFunction { values })
    }

    pub fn constant(n: u32, value: f64) -> Self {
        VertexFunction {
            values: vec![value; n as usize],
        }
    }

    pub fn zero(n: u32) -> Self {
        Self::constant(n, 0.0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the given vertex.
    pub fn value(&self, v: VertexId) -> f64 {
        self.values[v.to_index()]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Pointwise absolute value.
    pub fn abs(&self) -> VertexFunction {
        VertexFunction {
            values: self.values.iter().map(|v| v.abs()).collect(),
        }
    }
}

/// A real-valued function on the hyperarcs (or hyperedges) of a
/// hypergraph: position `q` holds the value at the arc with 0-based
/// index `q`. All values are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperarcFunction {
    values: Vec<f64>,
}

impl HyperarcFunction {
    pub fn new(values: Vec<f64>) -> Result<Self, SpaceError> {
        check_finite(&values)?;
        Ok(HyperarcFunction { values })
    }

    pub fn constant(m: usize, value: f64) -> Self {
        HyperarcFunction {
            values: vec![value; m],
        }
    }

    pub fn zero(m: usize) -> Self {
        Self::constant(m, 0.0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the hyperarc with 0-based index `q`.
    pub fn value(&self, q: usize) -> f64 {
        self.values[q]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Pointwise absolute value.
    pub fn abs(&self) -> HyperarcFunction {
        HyperarcFunction {
            values: self.values.iter().map(|v| v.abs()).collect(),
        }
    }
}
