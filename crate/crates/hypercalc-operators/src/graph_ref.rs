//! Graph-specific closed forms of the operator family, evaluated directly
//! over arcs (v_i, v_j). These serve as independent references: on a graph
//! embedded as a hypergraph with singleton sides, every hypergraph operator
//! must reproduce them.

use hypercalc_core::{OrientedNormalGraph, VertexId};
use hypercalc_spaces::{HyperarcFunction, VertexFunction, WeightAssignment};

use crate::config::{HyperarcAdjointMode, HyperarcDegreeMode, OperatorConfig, VertexAdjointMode};
use crate::error::OperatorError;
use crate::phi::{check_p, signed_power};
use crate::support::{expect_len, hyperarc_result, vertex_result};

fn expect_graph_inputs(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    vertex_len: Option<usize>,
    arc_len: Option<usize>,
) -> Result<(), OperatorError> {
    expect_len(g.vertex_count() as usize, weights.vertex_count())?;
    expect_len(g.arc_count(), weights.hyperarc_count())?;
    if let Some(len) = vertex_len {
        expect_len(g.vertex_count() as usize, len)?;
    }
    if let Some(len) = arc_len {
        expect_len(g.arc_count(), len)?;
    }
    Ok(())
}

fn in_divisor(g: &OrientedNormalGraph, v: VertexId, mode: HyperarcDegreeMode) -> f64 {
    match mode {
        HyperarcDegreeMode::ReciprocalInOut => g.degree_in(v) as f64,
        HyperarcDegreeMode::Unit => 1.0,
    }
}

fn out_divisor(g: &OrientedNormalGraph, v: VertexId, mode: HyperarcDegreeMode) -> f64 {
    match mode {
        HyperarcDegreeMode::ReciprocalInOut => g.degree_out(v) as f64,
        HyperarcDegreeMode::Unit => 1.0,
    }
}

/// Graph vertex gradient: per arc (v_i, v_j),
/// W_G^γ (w_I(v_j)^α w_G(v_j)^ε f_j − w_I(v_i)^α w_G(v_i)^η f_i).
pub fn graph_vertex_gradient(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
) -> Result<HyperarcFunction, OperatorError> {
    cfg.validate()?;
    expect_graph_inputs(g, weights, Some(f.len()), None)?;
    let values = g
        .arcs()
        .iter()
        .enumerate()
        .map(|(q, arc)| {
            let (i, j) = (arc.tail(), arc.head());
            weights.big_w_g(q).powf(cfg.gamma)
                * (weights.w_i(j).powf(cfg.alpha) * weights.w_g(j).powf(cfg.epsilon) * f.value(j)
                    - weights.w_i(i).powf(cfg.alpha) * weights.w_g(i).powf(cfg.eta) * f.value(i))
        })
        .collect();
    hyperarc_result(values)
}

/// Graph vertex adjoint: per vertex v_i,
/// Σ_{(v_j,v_i)} w_G(v_i)^ε W_I^β W_G^γ F − Σ_{(v_i,v_j)} w_G(v_i)^η W_I^β W_G^γ F
/// (`NegatedTotalDegree` rescales the sum by −1/deg(v_i)).
pub fn graph_vertex_adjoint(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
) -> Result<VertexFunction, OperatorError> {
    cfg.validate()?;
    expect_graph_inputs(g, weights, None, Some(big_f.len()))?;
    let mut out = vec![0.0; g.vertex_count() as usize];
    for (q, arc) in g.arcs().iter().enumerate() {
        let scale =
            weights.big_w_i(q).powf(cfg.beta) * weights.big_w_g(q).powf(cfg.gamma) * big_f.value(q);
        let (i, j) = (arc.tail(), arc.head());
        out[j.to_index()] += weights.w_g(j).powf(cfg.epsilon) * scale;
        out[i.to_index()] -= weights.w_g(i).powf(cfg.eta) * scale;
    }
    if cfg.vertex_adjoint_mode == VertexAdjointMode::NegatedTotalDegree {
        for v in g.vertices() {
            let deg = g.degree(v);
            if deg > 0 {
                out[v.to_index()] *= -1.0 / deg as f64;
            }
        }
    }
    vertex_result(out)
}

/// Graph vertex divergence = −adjoint.
pub fn graph_vertex_divergence(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
) -> Result<VertexFunction, OperatorError> {
    let adj = graph_vertex_adjoint(g, weights, cfg, big_f)?;
    vertex_result(adj.values().iter().map(|v| -v).collect())
}

/// Graph vertex Laplacian: the closed form summing, per arc (v_i, v_j),
/// W_I^β W_G^{2γ} [w_G(v_i)^η w_I(v_j)^α w_G(v_j)^ε f_j − w_I(v_i)^α w_G(v_i)^{2η} f_i]
/// into v_i and the mirrored term into v_j. Default vertex modes only.
pub fn graph_vertex_laplacian(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
) -> Result<VertexFunction, OperatorError> {
    graph_vertex_explicit(g, weights, cfg, f, 2.0)
}

/// Graph vertex p-Laplacian closed form (W_G exponent pγ and the
/// |·|^{p−2} factor on each arc's weighted difference). Default vertex
/// modes only; finite p > 1.
pub fn graph_vertex_p_laplacian(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
    p: f64,
) -> Result<VertexFunction, OperatorError> {
    check_p(p)?;
    graph_vertex_explicit(g, weights, cfg, f, p)
}

fn graph_vertex_explicit(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
    p: f64,
) -> Result<VertexFunction, OperatorError> {
    cfg.validate()?;
    if !cfg.vertex_modes_are_default() {
        return Err(OperatorError::UnsupportedMode);
    }
    expect_graph_inputs(g, weights, Some(f.len()), None)?;
    let mut out = vec![0.0; g.vertex_count() as usize];
    for (q, arc) in g.arcs().iter().enumerate() {
        let (i, j) = (arc.tail(), arc.head());
        let wi_i = weights.w_i(i).powf(cfg.alpha);
        let wi_j = weights.w_i(j).powf(cfg.alpha);
        let wg_i_eta = weights.w_g(i).powf(cfg.eta);
        let wg_j_eps = weights.w_g(j).powf(cfg.epsilon);
        let arc_scale = weights.big_w_i(q).powf(cfg.beta) * weights.big_w_g(q).powf(p * cfg.gamma);
        // Both endpoint terms of the closed form factor through the arc's
        // weighted difference D: the tail receives w_G(v_i)^η·φ_p(D) (i.e.
        // w_G^η w_I^α w_G^ε f_j − w_I^α w_G^{2η} f_i at p = 2) and the head
        // the mirrored −w_G(v_j)^ε·φ_p(D).
        let d = wi_j * wg_j_eps * f.value(j) - wi_i * wg_i_eta * f.value(i);
        let phi = signed_power(d, p);
        out[i.to_index()] += arc_scale * wg_i_eta * phi;
        out[j.to_index()] -= arc_scale * wg_j_eps * phi;
    }
    vertex_result(out)
}

/// Graph arc gradient: per vertex v,
/// w_G(v)^ζ Σ_q (δ_in/deg_in(v) − δ_out/deg_out(v)) W_I^β W_G^θ F(a_q)
/// (divisors dropped under `Unit` degree mode).
pub fn graph_arc_gradient(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
) -> Result<VertexFunction, OperatorError> {
    cfg.validate()?;
    expect_graph_inputs(g, weights, None, Some(big_f.len()))?;
    let mut out = vec![0.0; g.vertex_count() as usize];
    for (q, arc) in g.arcs().iter().enumerate() {
        let scale =
            weights.big_w_i(q).powf(cfg.beta) * weights.big_w_g(q).powf(cfg.theta) * big_f.value(q);
        let (i, j) = (arc.tail(), arc.head());
        out[j.to_index()] += scale / in_divisor(g, j, cfg.hyperarc_degree_mode);
        out[i.to_index()] -= scale / out_divisor(g, i, cfg.hyperarc_degree_mode);
    }
    for v in g.vertices() {
        out[v.to_index()] *= weights.w_g(v).powf(cfg.zeta);
    }
    vertex_result(out)
}

/// Graph arc adjoint: per arc (v_i, v_j), `Mirror` gives
/// W_G^θ (w_I(v_j)^α w_G(v_j)^ζ f_j / deg_in(v_j) − w_I(v_i)^α w_G(v_i)^ζ f_i / deg_out(v_i));
/// `NegatedTotalDegree` uses uniform −1/deg(v) factors and no W_G^θ.
pub fn graph_arc_adjoint(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
) -> Result<HyperarcFunction, OperatorError> {
    cfg.validate()?;
    expect_graph_inputs(g, weights, Some(f.len()), None)?;
    let values = g
        .arcs()
        .iter()
        .enumerate()
        .map(|(q, arc)| {
            let (i, j) = (arc.tail(), arc.head());
            let term = |v: VertexId| {
                weights.w_i(v).powf(cfg.alpha) * weights.w_g(v).powf(cfg.zeta) * f.value(v)
            };
            match cfg.hyperarc_adjoint_mode {
                HyperarcAdjointMode::Mirror => {
                    weights.big_w_g(q).powf(cfg.theta)
                        * (term(j) / in_divisor(g, j, cfg.hyperarc_degree_mode)
                            - term(i) / out_divisor(g, i, cfg.hyperarc_degree_mode))
                }
                HyperarcAdjointMode::NegatedTotalDegree => {
                    -(term(j) / g.degree(j) as f64 - term(i) / g.degree(i) as f64)
                }
            }
        })
        .collect();
    hyperarc_result(values)
}

/// Graph arc divergence = −adjoint.
pub fn graph_arc_divergence(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    f: &VertexFunction,
) -> Result<HyperarcFunction, OperatorError> {
    let adj = graph_arc_adjoint(g, weights, cfg, f)?;
    hyperarc_result(adj.values().iter().map(|v| -v).collect())
}

/// Graph arc Laplacian: per arc (v_i, v_j),
/// W_G^θ [w_I(v_i)^α w_G(v_i)^{2ζ}/deg_out(v_i) · S(v_i) − w_I(v_j)^α w_G(v_j)^{2ζ}/deg_in(v_j) · S(v_j)]
/// with S(v) = Σ_r (δ_in/deg_in(v) − δ_out/deg_out(v)) W_I^β W_G^θ F(a_r).
/// Default hyperarc modes only.
pub fn graph_arc_laplacian(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
) -> Result<HyperarcFunction, OperatorError> {
    graph_arc_explicit(g, weights, cfg, big_f, 2.0)
}

/// Graph arc p-Laplacian closed form (w_G exponent pζ and φ_p applied to
/// S(v)). Default hyperarc modes only; finite p > 1.
pub fn graph_arc_p_laplacian(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
    p: f64,
) -> Result<HyperarcFunction, OperatorError> {
    check_p(p)?;
    graph_arc_explicit(g, weights, cfg, big_f, p)
}

fn graph_arc_explicit(
    g: &OrientedNormalGraph,
    weights: &WeightAssignment,
    cfg: &OperatorConfig,
    big_f: &HyperarcFunction,
    p: f64,
) -> Result<HyperarcFunction, OperatorError> {
    cfg.validate()?;
    if !cfg.hyperarc_modes_are_default() {
        return Err(OperatorError::UnsupportedMode);
    }
    expect_graph_inputs(g, weights, None, Some(big_f.len()))?;
    let mut inner = vec![0.0; g.vertex_count() as usize];
    for (q, arc) in g.arcs().iter().enumerate() {
        let scale =
            weights.big_w_i(q).powf(cfg.beta) * weights.big_w_g(q).powf(cfg.theta) * big_f.value(q);
        inner[arc.head().to_index()] += scale / g.degree_in(arc.head()) as f64;
        inner[arc.tail().to_index()] -= scale / g.degree_out(arc.tail()) as f64;
    }
    let values = g
        .arcs()
        .iter()
        .enumerate()
        .map(|(q, arc)| {
            let (i, j) = (arc.tail(), arc.head());
            let term = |v: VertexId| {
                weights.w_i(v).powf(cfg.alpha)
                    * weights.w_g(v).powf(p * cfg.zeta)
                    * signed_power(inner[v.to_index()], p)
            };
            weights.big_w_g(q).powf(cfg.theta)
                * (term(i) / g.degree_out(i) as f64 - term(j) / g.degree_in(j) as f64)
        })
        .collect();
    hyperarc_result(values)
}
