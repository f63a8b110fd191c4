use hypercalc_core::VertexId;

use crate::error::SpaceError;

fn check_positive(values: &[f64]) -> Result<(), SpaceError> {
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() {
            return Err(SpaceError::NotFinite { position: i + 1 });
        }
        if v <= 0.0 {
            return Err(SpaceError::NonPositive {
                position: i + 1,
                value: v,
            });
        }
    }
    Ok(())
}

/// The four weight families of a weighted hypergraph: per-vertex `w_I`,
/// `w_G` and per-hyperarc `W_I`, `W_G`. All strictly positive and finite,
/// so arbitrary real exponents are safe.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightAssignment {
    w_i: Vec<f64>,
    w_g: Vec<f64>,
    big_w_i: Vec<f64>,
    big_w_g: Vec<f64>,
}

impl WeightAssignment {
    pub fn new(
        w_i: Vec<f64>,
        w_g: Vec<f64>,
        big_w_i: Vec<f64>,
        big_w_g: Vec<f64>,
    ) -> Result<Self, SpaceError> {
        if w_g.len() != w_i.len() {
            return Err(SpaceError::LengthMismatch {
                expected: w_i.len(),
                got: w_g.len(),
            });
        }
        if big_w_g.len() != big_w_i.len() {
            return Err(SpaceError::LengthMismatch {
                expected: big_w_i.len(),
                got: big_w_g.len(),
            });
        }
        for values in [&w_i, &w_g, &big_w_i, &big_w_g] {
            check_positive(values)?;
        }
        Ok(WeightAssignment {
            w_i,
            w_g,
            big_w_i,
            big_w_g,
        })
    }

    /// All weights 1: every exponent becomes irrelevant, reproducing the
    /// unweighted setting.
    pub fn uniform(n: u32, m: usize) -> Self {
        WeightAssignment {
            w_i: vec![1.0; n as usize],
            w_g: vec![1.0; n as usize],
            big_w_i: vec![1.0; m],
            big_w_g: vec![1.0; m],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.w_i.len()
    }

    pub fn hyperarc_count(&self) -> usize {
        self.big_w_i.len()
    }

    /// Vertex weight `w_I(v)`.
    pub fn w_i(&self, v: VertexId) -> f64 {
        self.w_i[v.to_index()]
    }

    /// Vertex weight `w_G(v)`.
    pub fn w_g(&self, v: VertexId) -> f64 {
        self.w_g[v.to_index()]
    }

    /// Hyperarc weight `W_I(a_q)`, `q` 0-based.
    pub fn big_w_i(&self, q: usize) -> f64 {
        self.big_w_i[q]
    }

    /// Hyperarc weight `W_G(a_q)`, `q` 0-based.
    pub fn big_w_g(&self, q: usize) -> f64 {
        self.big_w_g[q]
    }

    /// Replaces the vertex `w_I` family.
    pub fn with_w_i(mut self, values: Vec<f64>) -> Result<Self, SpaceError> {
        check_positive(&values)?;
        self.expect_len(self.w_i.len(), values.len())?;
        self.w_i = values;
        Ok(self)
    }

    /// Replaces the vertex `w_G` family.
    pub fn with_w_g(mut self, values: Vec<f64>) -> Result<Self, SpaceError> {
        check_positive(&values)?;
        self.expect_len(self.w_g.len(), values.len())?;
        self.w_g = values;
        Ok(self)
    }

    /// Replaces the hyperarc `W_I` family.
    pub fn with_big_w_i(mut self, values: Vec<f64>) -> Result<Self, SpaceError> {
        check_positive(&values)?;
        self.expect_len(self.big_w_i.len(), values.len())?;
        self.big_w_i = values;
        Ok(self)
    }

    /// Replaces the hyperarc `W_G` family.
    pub fn with_big_w_g(mut self, values: Vec<f64>) -> Result<Self, SpaceError> {
        check_positive(&values)?;
        self.expect_len(self.big_w_g.len(), values.len())?;
        self.big_w_g = values;
        Ok(self)
    }

    fn expect_len(&self, expected: usize, got: usize) -> Result<(), SpaceError> {
        if expected != got {
            return Err(SpaceError::LengthMismatch { expected, got });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_weights() {
        let err = WeightAssignment::new(vec![1.0, 0.0], vec![1.0, 1.0], vec![], vec![])
            .unwrap_err();
        assert_eq!(
            err,
            SpaceError::NonPositive {
                position: 2,
                value: 0.0
            }
        );
    }

    #[test]
    fn uniform_weights_are_all_one() {
        let w = WeightAssignment::uniform(3, 2);
        assert_eq!(w.w_i(VertexId::new(2)), 1.0);
        assert_eq!(w.big_w_g(1), 1.0);
        assert_eq!((w.vertex_count(), w.hyperarc_count()), (3, 2));
    }

    #[test]
    fn with_replaces_one_family() {
        let w = WeightAssignment::uniform(2, 1)
            .with_big_w_i(vec![0.5])
            .unwrap();
        assert_eq!(w.big_w_i(0), 0.5);
        assert_eq!(w.big_w_g(0), 1.0);
        assert!(w.clone().with_w_i(vec![1.0]).is_err());
        assert!(w.with_w_i(vec![-2.0, 1.0]).is_err());
    }
}
