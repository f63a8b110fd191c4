use hypercalc_core::OrientedHypergraph;
use hypercalc_spaces::{HyperarcFunction, VertexFunction, WeightAssignment};

use crate::config::{Method, OperatorConfig, VertexAdjointMode, VertexCardinalityMode};
use crate::error::OperatorError;
use crate::phi::{check_p, signed_power};
use crate::support::{
    expect_hyperarc_fn, expect_vertex_fn, expect_weights, hyperarc_result, vertex_result,
};

/// Side divisors for the vertex family: (input side, output side).
fn cardinality_divisors(
    arc: &hypercalc_core::Hyperarc,
    mode: VertexCardinalityMode,
) -> (f64, f64) {
    match mode {
        VertexCardinalityMode::Reciprocal => {
            (arc.in_set().len() as f64, arc.out_set().len() as f64)
        }
        VertexCardinalityMode::Unit => (1.0, 1.0),
    }
}

/// Vertex gradient ∇_v: per hyperarc a_q,
/// W_G(a_q)^γ · [Σ_in w_I^α w_G^ε f / |a_q^in| − Σ_out w_I^α w_G^η f / |a_q^out|]
/// (divisors dropped under `Unit` cardinality mode).
pub fn vertex_gradient(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
) -> Result<HyperarcFunction, OperatorError> {
    cfg.validate()?;
    expect_weights(h, weights)?;
    expect_vertex_fn(h, f)?;
    let values = h
        .hyperarcs()
        .iter()
        .enumerate()
        .map(|(q, arc)| {
            let (in_div, out_div) = cardinality_divisors(arc, cfg.vertex_cardinality_mode);
            let mut sum = 0.0;
            for v in arc.in_set() {
                sum += weights.w_i(v).powf(cfg.alpha) * weights.w_g(v).powf(cfg.epsilon)
                    / in_div
                    * f.value(v);
            }
            for v in arc.out_set() {
                sum -= weights.w_i(v).powf(cfg.alpha) * weights.w_g(v).powf(cfg.eta)
                    / out_div
                    * f.value(v);
            }
            weights.big_w_g(q).powf(cfg.gamma) * sum
        })
        .collect();
    hyperarc_result(values)
}

/// Vertex adjoint ∇*_v. `Mirror`: per vertex v,
/// Σ_q (δ_in w_G^ε/|a_q^in| − δ_out w_G^η/|a_q^out|) · W_I^β W_G^γ F(a_q).
/// `NegatedTotalDegree`: the same sum with unit cardinalities, scaled by
/// −1/deg(v); isolated vertices map to 0.
pub fn vertex_adjoint(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
) -> Result<VertexFunction, OperatorError> {
    cfg.validate()?;
    expect_weights(h, weights)?;
    expect_hyperarc_fn(h, big_f)?;
    let mut out = vec![0.0; h.vertex_count() as usize];
    let negated = cfg.vertex_adjoint_mode == VertexAdjointMode::NegatedTotalDegree;
    for (q, arc) in h.hyperarcs().iter().enumerate() {
        let (in_div, out_div) = if negated {
            (1.0, 1.0)
        } else {
            cardinality_divisors(arc, cfg.vertex_cardinality_mode)
        };
        let scale =
            weights.big_w_i(q).powf(cfg.beta) * weights.big_w_g(q).powf(cfg.gamma) * big_f.value(q);
        for v in arc.in_set() {
            out[v.to_index()] += weights.w_g(v).powf(cfg.epsilon) / in_div * scale;
        }
        for v in arc.out_set() {
            out[v.to_index()] -= weights.w_g(v).powf(cfg.eta) / out_div * scale;
        }
    }
    if negated {
        for v in h.vertices() {
            let deg = h.degree(v);
            if deg > 0 {
                out[v.to_index()] *= -1.0 / deg as f64;
            }
        }
    }
    vertex_result(out)
}

/// Vertex divergence div_v = −∇*_v, in every mode.
pub fn vertex_divergence(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
) -> Result<VertexFunction, OperatorError> {
    let adj = vertex_adjoint(h, weights, cfg, big_f)?;
    vertex_result(adj.values().iter().map(|v| -v).collect())
}

/// Vertex Laplacian Δ_v f = div_v(∇_v f). `Explicit` evaluates the
/// double-sum closed form (W_G exponent 2γ), defined only for the default
/// vertex modes; `Composed` is valid in every mode.
pub fn vertex_laplacian(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
    method: Method,
) -> Result<VertexFunction, OperatorError> {
    match method {
        Method::Composed => {
            let grad = vertex_gradient(h, weights, cfg, f)?;
            vertex_divergence(h, weights, cfg, &grad)
        }
        Method::Explicit => vertex_explicit(h, weights, cfg, f, 2.0),
    }
}

/// Vertex p-Laplacian Δ_v^p f = div_v(|∇_v f|^{p−2} ∇_v f), finite p > 1.
/// `Explicit` evaluates the closed form with W_G exponent pγ (default
/// vertex modes only); p = 2 coincides with [`vertex_laplacian`].
pub fn vertex_p_laplacian(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
    p: f64,
    method: Method,
) -> Result<VertexFunction, OperatorError> {
    check_p(p)?;
    match method {
        Method::Composed => {
            let grad = vertex_gradient(h, weights, cfg, f)?;
            let powered = hyperarc_result(
                grad.values().iter().map(|&x| signed_power(x, p)).collect(),
            )?;
            vertex_divergence(h, weights, cfg, &powered)
        }
        Method::Explicit => vertex_explicit(h, weights, cfg, f, p),
    }
}

/// Shared explicit closed form: Laplacian is the p = 2 case. Per vertex v,
/// −Σ_q (δ_in w_G(v)^ε/|in| − δ_out w_G(v)^η/|out|) W_I^β W_G^{pγ} φ_p(S_q)
/// with S_q the inner weighted difference of the gradient (sans W_G^γ).
fn vertex_explicit(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
    p: f64,
) -> Result<VertexFunction, OperatorError> {
    cfg.validate()?;
    if !cfg.vertex_modes_are_default() {
        return Err(OperatorError::UnsupportedMode);
    }
    expect_weights(h, weights)?;
    expect_vertex_fn(h, f)?;
    let mut out = vec![0.0; h.vertex_count() as usize];
    for (q, arc) in h.hyperarcs().iter().enumerate() {
        let in_card = arc.in_set().len() as f64;
        let out_card = arc.out_set().len() as f64;
        let mut inner = 0.0;
        for v in arc.in_set() {
            inner += weights.w_i(v).powf(cfg.alpha) * weights.w_g(v).powf(cfg.epsilon) / in_card
                * f.value(v);
        }
        for v in arc.out_set() {
            inner -= weights.w_i(v).powf(cfg.alpha) * weights.w_g(v).powf(cfg.eta) / out_card
                * f.value(v);
        }
        let scale = weights.big_w_i(q).powf(cfg.beta)
            * weights.big_w_g(q).powf(p * cfg.gamma)
            * signed_power(inner, p);
        for v in arc.in_set() {
            out[v.to_index()] -= weights.w_g(v).powf(cfg.epsilon) / in_card * scale;
        }
        for v in arc.out_set() {
            out[v.to_index()] += weights.w_g(v).powf(cfg.eta) / out_card * scale;
        }
    }
    vertex_result(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Preset;

    /// 3 vertices, single hyperarc ({1,2},{3}).
    fn h_star() -> OrientedHypergraph {
        OrientedHypergraph::build(3, [(vec![1, 2], vec![3])]).unwrap()
    }

    fn unit_weights(h: &OrientedHypergraph) -> WeightAssignment {
        WeightAssignment::uniform(h.vertex_count(), h.hyperarc_count())
    }

    #[test]
    fn gradient_on_the_single_hyperarc_fixture() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = OperatorConfig::default();
        let f = VertexFunction::new(vec![1.0, 2.0, 3.0]).unwrap();
        let grad = vertex_gradient(&h, &w, &cfg, &f).unwrap();
        assert_eq!(grad.values(), &[1.5]);
        // Switching the orientation negates the gradient here (ε = η and a
        // single arc, so the weight-symmetry condition is vacuous).
        let grad_switched = vertex_gradient(&h.switched(), &w, &cfg, &f).unwrap();
        assert_eq!(grad_switched.values(), &[-1.5]);
    }

    #[test]
    fn gradient_of_constants_vanishes() {
        let h = OrientedHypergraph::build(
            5,
            [(vec![1, 2], vec![4]), (vec![3], vec![1, 5]), (vec![5], vec![2])],
        )
        .unwrap();
        let w = unit_weights(&h);
        let cfg = OperatorConfig {
            alpha: 0.7,
            gamma: -0.3,
            epsilon: 1.1,
            eta: 1.1,
            ..OperatorConfig::default()
        };
        let f = VertexFunction::constant(5, 4.25);
        let grad = vertex_gradient(&h, &w, &cfg, &f).unwrap();
        assert_eq!(grad.values(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn adjoint_on_the_fixture() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = OperatorConfig::default();
        let big_f = HyperarcFunction::new(vec![2.0]).unwrap();
        let adj = vertex_adjoint(&h, &w, &cfg, &big_f).unwrap();
        assert_eq!(adj.values(), &[-1.0, -1.0, 2.0]);
        let div = vertex_divergence(&h, &w, &cfg, &big_f).unwrap();
        assert_eq!(div.values(), &[1.0, 1.0, -2.0]);
    }

    #[test]
    fn duality_witness_on_the_fixture() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = OperatorConfig::default();
        let f = VertexFunction::new(vec![1.0, 2.0, 3.0]).unwrap();
        let big_f = HyperarcFunction::new(vec![2.0]).unwrap();
        let grad = vertex_gradient(&h, &w, &cfg, &f).unwrap();
        let adj = vertex_adjoint(&h, &w, &cfg, &big_f).unwrap();
        let lhs =
            hypercalc_spaces::hyperarc_inner_product(&big_f, &grad, &w, cfg.beta).unwrap();
        let rhs = hypercalc_spaces::vertex_inner_product(&f, &adj, &w, cfg.alpha).unwrap();
        assert_eq!(lhs, 3.0);
        assert_eq!(rhs, 3.0);
    }

    #[test]
    fn laplacian_fixture_values() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = OperatorConfig::default();
        let f = VertexFunction::new(vec![1.0, 2.0, 3.0]).unwrap();
        for method in [Method::Composed, Method::Explicit] {
            let lap = vertex_laplacian(&h, &w, &cfg, &f, method).unwrap();
            assert_eq!(lap.values(), &[0.75, 0.75, -1.5], "{method:?}");
            let plap = vertex_p_laplacian(&h, &w, &cfg, &f, 3.0, method).unwrap();
            assert_eq!(plap.values(), &[1.125, 1.125, -2.25], "{method:?}");
        }
    }

    #[test]
    fn explicit_form_requires_default_modes() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = Preset::JostVertex.config();
        let f = VertexFunction::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(
            vertex_laplacian(&h, &w, &cfg, &f, Method::Explicit).unwrap_err(),
            OperatorError::UnsupportedMode
        );
        assert!(vertex_laplacian(&h, &w, &cfg, &f, Method::Composed).is_ok());
    }

    #[test]
    fn negated_total_degree_adjoint_divides_by_degree() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = Preset::JostVertex.config();
        let big_f = HyperarcFunction::new(vec![2.0]).unwrap();
        // Unit cardinalities: raw sums are (−2, −2, 2); scaled by −1/deg.
        let adj = vertex_adjoint(&h, &w, &cfg, &big_f).unwrap();
        assert_eq!(adj.values(), &[2.0, 2.0, -2.0]);
    }

    #[test]
    fn isolated_vertices_map_to_zero() {
        let h = OrientedHypergraph::build(4, [(vec![1], vec![2])]).unwrap();
        let w = WeightAssignment::uniform(4, 1);
        let big_f = HyperarcFunction::new(vec![7.0]).unwrap();
        for cfg in [OperatorConfig::default(), Preset::JostVertex.config()] {
            let adj = vertex_adjoint(&h, &w, &cfg, &big_f).unwrap();
            assert_eq!(adj.values()[2], 0.0);
            assert_eq!(adj.values()[3], 0.0);
        }
    }

    #[test]
    fn invalid_p_and_length_mismatches_are_rejected() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = OperatorConfig::default();
        let f = VertexFunction::new(vec![1.0, 2.0, 3.0]).unwrap();
        for p in [1.0, 0.5, f64::INFINITY] {
            assert_eq!(
                vertex_p_laplacian(&h, &w, &cfg, &f, p, Method::Composed).unwrap_err(),
                OperatorError::InvalidP { p }
            );
        }
        let short = VertexFunction::new(vec![1.0]).unwrap();
        assert_eq!(
            vertex_gradient(&h, &w, &cfg, &short).unwrap_err(),
            OperatorError::LengthMismatch {
                expected: 3,
                got: 1
            }
        );
    }
}
