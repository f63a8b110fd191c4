use hypercalc_core::VertexId;

use crate::error::SpaceError;
use crate::functions::{HyperarcFunction, VertexFunction};
use crate::weights::WeightAssignment;

/// Weighted vertex inner product ⟨f, g⟩ = Σ_i w_I(v_i)^α f(v_i) g(v_i).
/// With unit weights or α = 0 this is the plain dot product.
pub fn vertex_inner_product(
    f: &VertexFunction,
    g: &VertexFunction,
    weights: &WeightAssignment,
    alpha: f64,
) -> Result<f64, SpaceError> {
    if f.len() != g.len() {
        return Err(SpaceError::LengthMismatch {
            expected: f.len(),
            got: g.len(),
        });
    }
    if weights.vertex_count() != f.len() {
        return Err(SpaceError::LengthMismatch {
            expected: f.len(),
            got: weights.vertex_count(),
        });
    }
    // Grouping f·g first keeps the form exactly symmetric in f and g.
    Ok((1..=f.len() as u32)
        .map(VertexId::new)
        .map(|v| weights.w_i(v).powf(alpha) * (f.value(v) * g.value(v)))
        .sum())
}

/// Weighted hyperarc inner product ⟨F, G⟩ = Σ_q W_I(a_q)^β F(a_q) G(a_q).
/// With β = 1 and W_I ≡ ½ this is ½ Σ F G, pairing with the hyperarc norm.
pub fn hyperarc_inner_product(
    f: &HyperarcFunction,
    g: &HyperarcFunction,
    weights: &WeightAssignment,
    beta: f64,
) -> Result<f64, SpaceError> {
    if f.len() != g.len() {
        return Err(SpaceError::LengthMismatch {
            expected: f.len(),
            got: g.len(),
        });
    }
    if weights.hyperarc_count() != f.len() {
        return Err(SpaceError::LengthMismatch {
            expected: f.len(),
            got: weights.hyperarc_count(),
        });
    }
    // Grouping F·G first keeps the form exactly symmetric in F and G.
    Ok((0..f.len())
        .map(|q| weights.big_w_i(q).powf(beta) * (f.value(q) * g.value(q)))
        .sum())
}

/// Vertex Lᵖ norm (Σ_i |f(v_i)|^p)^{1/p}; `p = ∞` gives max |f|.
pub fn vertex_lp_norm(f: &VertexFunction, p: f64) -> Result<f64, SpaceError> {
    lp_norm(f.values(), p, 1.0)
}

/// Hyperarc Lᵖ norm (½ Σ_q |F(a_q)|^p)^{1/p}; `p = ∞` gives max |F|.
/// Unlike the vertex norm, the sum carries a ½ factor.
pub fn hyperarc_lp_norm(f: &HyperarcFunction, p: f64) -> Result<f64, SpaceError> {
    lp_norm(f.values(), p, 0.5)
}

fn lp_norm(values: &[f64], p: f64, scale: f64) -> Result<f64, SpaceError> {
    if p.is_nan() || p < 1.0 {
        return Err(SpaceError::InvalidP { p });
    }
    if p.is_infinite() {
        return Ok(values.iter().fold(0.0, |acc, v| acc.max(v.abs())));
    }
    let sum: f64 = values.iter().map(|v| v.abs().powf(p)).sum();
    Ok((scale * sum).powf(1.0 / p))
}

/// Divides every value by the maximum, mapping onto (0, 1] with the
/// maximum sent exactly to 1 and all pairwise ratios preserved.
pub fn normalize_weights(values: &[f64]) -> Result<Vec<f64>, SpaceError> {
    if values.is_empty() {
        return Err(SpaceError::EmptyInput);
    }
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
    let max = values.iter().fold(f64::MIN, |acc, &v| acc.max(v));
    Ok(values.iter().map(|&v| v / max).collect())
}
