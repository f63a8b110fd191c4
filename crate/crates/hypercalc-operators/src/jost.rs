//! Simplified unweighted p-Laplacians used as independent references for
//! the [`crate::Preset::JostVertex`] and [`crate::Preset::JostHyperarc`]
//! parameter choices.

use hypercalc_core::OrientedHypergraph;
use hypercalc_spaces::{HyperarcFunction, VertexFunction};

use crate::error::OperatorError;
use crate::phi::{check_p, signed_power};
use crate::support::{expect_hyperarc_fn, expect_vertex_fn, hyperarc_result, vertex_result};

/// Simplified vertex p-Laplacian: per vertex v,
/// (1/deg(v)) Σ_q (δ_in(v,a_q) − δ_out(v,a_q)) |D_q|^{p−2} D_q with
/// D_q = Σ_{in} f − Σ_{out} f; vertices with deg(v) = 0 map to 0.
pub fn jost_vertex_p_laplacian(
    h: &OrientedHypergraph,
    f: &VertexFunction,
    p: f64,
) -> Result<VertexFunction, OperatorError> {
    check_p(p)?;
    expect_vertex_fn(h, f)?;
    let mut out = vec![0.0; h.vertex_count() as usize];
    for arc in h.hyperarcs() {
        let diff: f64 = arc.in_set().iter().map(|v| f.value(v)).sum::<f64>()
            - arc.out_set().iter().map(|v| f.value(v)).sum::<f64>();
        let value = signed_power(diff, p);
        for v in arc.in_set() {
            out[v.to_index()] += value;
        }
        for v in arc.out_set() {
            out[v.to_index()] -= value;
        }
    }
    for v in h.vertices() {
        let deg = h.degree(v);
        if deg > 0 {
            out[v.to_index()] /= deg as f64;
        }
    }
    vertex_result(out)
}

/// Simplified hyperarc p-Laplacian: per hyperarc a_q,
/// Σ_v (1/deg(v)) (δ_in(v,a_q) − δ_out(v,a_q)) |U_v|^{p−2} U_v with
/// U_v = Σ_r (δ_in(v,a_r) − δ_out(v,a_r)) F(a_r).
pub fn jost_hyperarc_p_laplacian(
    h: &OrientedHypergraph,
    big_f: &HyperarcFunction,
    p: f64,
) -> Result<HyperarcFunction, OperatorError> {
    check_p(p)?;
    expect_hyperarc_fn(h, big_f)?;
    let mut inner = vec![0.0; h.vertex_count() as usize];
    for (q, arc) in h.hyperarcs().iter().enumerate() {
        for v in arc.in_set() {
            inner[v.to_index()] += big_f.value(q);
        }
        for v in arc.out_set() {
            inner[v.to_index()] -= big_f.value(q);
        }
    }
    let values = h
        .hyperarcs()
        .iter()
        .map(|arc| {
            let mut sum = 0.0;
            for v in arc.in_set() {
                sum += signed_power(inner[v.to_index()], p) / h.degree(v) as f64;
            }
            for v in arc.out_set() {
                sum -= signed_power(inner[v.to_index()], p) / h.degree(v) as f64;
            }
            sum
        })
        .collect();
    hyperarc_result(values)
}
