use hypercalc_core::{OrientedHypergraph, VertexId};
use hypercalc_spaces::{HyperarcFunction, VertexFunction, WeightAssignment};

use crate::config::{HyperarcAdjointMode, HyperarcDegreeMode, Method, OperatorConfig};
use crate::error::OperatorError;
use crate::phi::{check_p, signed_power};
use crate::support::{
    expect_hyperarc_fn, expect_vertex_fn, expect_weights, hyperarc_result, vertex_result,
};

/// Degree divisor for an input-side membership. Only called for incident
/// pairs, so the degree is at least 1 under `ReciprocalInOut`.
fn in_divisor(h: &OrientedHypergraph, v: VertexId, mode: HyperarcDegreeMode) -> f64 {
    match mode {
        HyperarcDegreeMode::ReciprocalInOut => h.degree_in(v) as f64,
        HyperarcDegreeMode::Unit => 1.0,
    }
}

fn out_divisor(h: &OrientedHypergraph, v: VertexId, mode: HyperarcDegreeMode) -> f64 {
    match mode {
        HyperarcDegreeMode::ReciprocalInOut => h.degree_out(v) as f64,
        HyperarcDegreeMode::Unit => 1.0,
    }
}

/// Hyperarc gradient ∇_a: per vertex v,
/// w_G(v)^ζ · Σ_q (δ_in/deg_in(v) − δ_out/deg_out(v)) W_I^β W_G^θ F(a_q)
/// (divisors dropped under `Unit` degree mode); isolated vertices map to 0.
pub fn hyperarc_gradient(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
) -> Result<VertexFunction, OperatorError> {
    cfg.validate()?;
    expect_weights(h, weights)?;
    expect_hyperarc_fn(h, big_f)?;
    let mut out = vec![0.0; h.vertex_count() as usize];
    for (q, arc) in h.hyperarcs().iter().enumerate() {
        let scale =
            weights.big_w_i(q).powf(cfg.beta) * weights.big_w_g(q).powf(cfg.theta) * big_f.value(q);
        for v in arc.in_set() {
            out[v.to_index()] += scale / in_divisor(h, v, cfg.hyperarc_degree_mode);
        }
        for v in arc.out_set() {
            out[v.to_index()] -= scale / out_divisor(h, v, cfg.hyperarc_degree_mode);
        }
    }
    for v in h.vertices() {
        out[v.to_index()] *= weights.w_g(v).powf(cfg.zeta);
    }
    vertex_result(out)
}

/// Hyperarc adjoint ∇*_a. `Mirror`: per hyperarc a_q,
/// W_G^θ · Σ_v (δ_in/deg_in(v) − δ_out/deg_out(v)) w_I^α w_G^ζ f(v).
/// `NegatedTotalDegree`: per a_q, −Σ_v (1/deg(v))(δ_in − δ_out) w_I^α w_G^ζ f(v)
/// — uniform total-degree factors and no W_G^θ prefactor.
pub fn hyperarc_adjoint(
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
            let term = |v: VertexId| {
                weights.w_i(v).powf(cfg.alpha) * weights.w_g(v).powf(cfg.zeta) * f.value(v)
            };
            match cfg.hyperarc_adjoint_mode {
                HyperarcAdjointMode::Mirror => {
                    let mut sum = 0.0;
                    for v in arc.in_set() {
                        sum += term(v) / in_divisor(h, v, cfg.hyperarc_degree_mode);
                    }
                    for v in arc.out_set() {
                        sum -= term(v) / out_divisor(h, v, cfg.hyperarc_degree_mode);
                    }
                    weights.big_w_g(q).powf(cfg.theta) * sum
                }
                HyperarcAdjointMode::NegatedTotalDegree => {
                    let mut sum = 0.0;
                    for v in arc.in_set() {
                        sum -= term(v) / h.degree(v) as f64;
                    }
                    for v in arc.out_set() {
                        sum += term(v) / h.degree(v) as f64;
                    }
                    sum
                }
            }
        })
        .collect();
    hyperarc_result(values)
}

/// Hyperarc divergence div_a = −∇*_a, in every mode.
pub fn hyperarc_divergence(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
) -> Result<HyperarcFunction, OperatorError> {
    let adj = hyperarc_adjoint(h, weights, cfg, f)?;
    hyperarc_result(adj.values().iter().map(|v| -v).collect())
}

/// Hyperarc Laplacian Δ_a F = div_a(∇_a F). `Explicit` evaluates the
/// double-sum closed form (w_G exponent 2ζ), defined only for the default
/// hyperarc modes; `Composed` is valid in every mode.
pub fn hyperarc_laplacian(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
    method: Method,
) -> Result<HyperarcFunction, OperatorError> {
    match method {
        Method::Composed => {
            let grad = hyperarc_gradient(h, weights, cfg, big_f)?;
            hyperarc_divergence(h, weights, cfg, &grad)
        }
        Method::Explicit => hyperarc_explicit(h, weights, cfg, big_f, 2.0),
    }
}

/// Hyperarc p-Laplacian Δ_a^p F = div_a(|∇_a F|^{p−2} ∇_a F), finite p > 1.
/// `Explicit` evaluates the closed form with w_G exponent pζ (default
/// hyperarc modes only); p = 2 coincides with [`hyperarc_laplacian`].
pub fn hyperarc_p_laplacian(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
    p: f64,
    method: Method,
) -> Result<HyperarcFunction, OperatorError> {
    check_p(p)?;
    match method {
        Method::Composed => {
            let grad = hyperarc_gradient(h, weights, cfg, big_f)?;
            let powered =
                vertex_result(grad.values().iter().map(|&x| signed_power(x, p)).collect())?;
            hyperarc_divergence(h, weights, cfg, &powered)
        }
        Method::Explicit => hyperarc_explicit(h, weights, cfg, big_f, p),
    }
}

/// Shared explicit closed form: per hyperarc a_q,
/// −W_G(a_q)^θ Σ_v (δ_in/deg_in(v) − δ_out/deg_out(v)) w_I^α w_G^{pζ} φ_p(T_v)
/// with T_v the inner degree-weighted sum of the gradient (sans w_G^ζ).
fn hyperarc_explicit(
    h: &OrientedHypergraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
    p: f64,
) -> Result<HyperarcFunction, OperatorError> {
    cfg.validate()?;
    if !cfg.hyperarc_modes_are_default() {
        return Err(OperatorError::UnsupportedMode);
    }
    expect_weights(h, weights)?;
    expect_hyperarc_fn(h, big_f)?;
    let mut inner = vec![0.0; h.vertex_count() as usize];
    for (q, arc) in h.hyperarcs().iter().enumerate() {
        let scale =
            weights.big_w_i(q).powf(cfg.beta) * weights.big_w_g(q).powf(cfg.theta) * big_f.value(q);
        for v in arc.in_set() {
            inner[v.to_index()] += scale / h.degree_in(v) as f64;
        }
        for v in arc.out_set() {
            inner[v.to_index()] -= scale / h.degree_out(v) as f64;
        }
    }
    let values = h
        .hyperarcs()
        .iter()
        .enumerate()
        .map(|(q, arc)| {
            let term = |v: VertexId| {
                weights.w_i(v).powf(cfg.alpha)
                    * weights.w_g(v).powf(p * cfg.zeta)
                    * signed_power(inner[v.to_index()], p)
            };
            let mut sum = 0.0;
            for v in arc.in_set() {
                sum += term(v) / h.degree_in(v) as f64;
            }
            for v in arc.out_set() {
                sum -= term(v) / h.degree_out(v) as f64;
            }
            -weights.big_w_g(q).powf(cfg.theta) * sum
        })
        .collect();
    hyperarc_result(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Preset;

    fn h_star() -> OrientedHypergraph {
        OrientedHypergraph::build(3, [(vec![1, 2], vec![3])]).unwrap()
    }

    fn unit_weights(h: &OrientedHypergraph) -> WeightAssignment {
        WeightAssignment::uniform(h.vertex_count(), h.hyperarc_count())
    }

    #[test]
    fn gradient_on_the_fixture() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = OperatorConfig::default();
        let big_f = HyperarcFunction::new(vec![2.0]).unwrap();
        let grad = hyperarc_gradient(&h, &w, &cfg, &big_f).unwrap();
        assert_eq!(grad.values(), &[-2.0, -2.0, 2.0]);
    }

    #[test]
    fn gradient_of_constants_vanishes_on_the_two_cycle() {
        // Every vertex has deg_in = deg_out = 1, so a constant function
        // with constant arc weights has zero gradient.
        let h = OrientedHypergraph::build(2, [(vec![1], vec![2]), (vec![2], vec![1])]).unwrap();
        let w = unit_weights(&h);
        let cfg = OperatorConfig {
            beta: 0.8,
            theta: -1.2,
            zeta: 0.5,
            ..OperatorConfig::default()
        };
        let big_f = HyperarcFunction::constant(2, 3.75);
        let grad = hyperarc_gradient(&h, &w, &cfg, &big_f).unwrap();
        assert_eq!(grad.values(), &[0.0, 0.0]);
    }

    #[test]
    fn adjoint_and_divergence_on_the_fixture() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = OperatorConfig::default();
        let f = VertexFunction::new(vec![1.0, 2.0, 4.0]).unwrap();
        let adj = hyperarc_adjoint(&h, &w, &cfg, &f).unwrap();
        assert_eq!(adj.values(), &[1.0]);
        let div = hyperarc_divergence(&h, &w, &cfg, &f).unwrap();
        assert_eq!(div.values(), &[-1.0]);
    }

    #[test]
    fn laplacian_fixture_values() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = OperatorConfig::default();
        let big_f = HyperarcFunction::new(vec![2.0]).unwrap();
        for method in [Method::Composed, Method::Explicit] {
            let lap = hyperarc_laplacian(&h, &w, &cfg, &big_f, method).unwrap();
            assert_eq!(lap.values(), &[-6.0], "{method:?}");
            let plap = hyperarc_p_laplacian(&h, &w, &cfg, &big_f, 3.0, method).unwrap();
            assert_eq!(plap.values(), &[-12.0], "{method:?}");
        }
    }

    #[test]
    fn explicit_form_requires_default_modes() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = Preset::JostHyperarc.config();
        let big_f = HyperarcFunction::new(vec![2.0]).unwrap();
        assert_eq!(
            hyperarc_laplacian(&h, &w, &cfg, &big_f, Method::Explicit).unwrap_err(),
            OperatorError::UnsupportedMode
        );
        assert!(hyperarc_laplacian(&h, &w, &cfg, &big_f, Method::Composed).is_ok());
    }

    #[test]
    fn negated_total_degree_adjoint_uses_total_degrees() {
        // Vertex 2 lies on both arcs (deg 2), vertices 1 and 3 on one each.
        let h = OrientedHypergraph::build(3, [(vec![1], vec![2]), (vec![2], vec![3])]).unwrap();
        let w = unit_weights(&h);
        let cfg = Preset::JostHyperarc.config();
        let f = VertexFunction::new(vec![1.0, 2.0, 4.0]).unwrap();
        let adj = hyperarc_adjoint(&h, &w, &cfg, &f).unwrap();
        // a_1 = ({1},{2}): −(2/2 − 1/1) = 0; a_2 = ({2},{3}): −(4/1 − 2/2) = −3.
        assert_eq!(adj.values(), &[0.0, -3.0]);
    }

    #[test]
    fn zero_function_maps_to_zero() {
        let h = h_star();
        let w = unit_weights(&h);
        let cfg = OperatorConfig::default();
        let f = VertexFunction::zero(3);
        assert_eq!(
            hyperarc_adjoint(&h, &w, &cfg, &f).unwrap().values(),
            &[0.0]
        );
    }
}
