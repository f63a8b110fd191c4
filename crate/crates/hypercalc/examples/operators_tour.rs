//! The full operator family on one weighted hypergraph: gradients,
//! adjoints, divergences, Laplacians, and p-Laplacians, for both the
//! vertex and hyperarc calculus, plus the adjoint duality they satisfy.

use hypercalc::{
    hyperarc_gradient, hyperarc_inner_product, hyperarc_laplacian, hyperarc_p_laplacian,
    vertex_adjoint, vertex_divergence, vertex_gradient, vertex_inner_product, vertex_laplacian,
    vertex_p_laplacian, HyperarcFunction, Method, OperatorConfig, OrientedHypergraph,
    VertexAdjointMode, VertexCardinalityMode, VertexFunction, WeightAssignment,
};

fn main() {
    let h = OrientedHypergraph::build(
        5,
        [
            (vec![1, 2], vec![4]),
            (vec![3], vec![2, 5]),
            (vec![4], vec![5]),
        ],
    )
    .unwrap();
    let w = WeightAssignment::uniform(5, 3)
        .with_w_i(vec![1.0, 2.0, 1.5, 0.5, 1.0])
        .unwrap()
        .with_big_w_g(vec![4.0, 1.0, 2.25])
        .unwrap();
    let f = VertexFunction::new(vec![1.0, -2.0, 0.5, 3.0, 0.0]).unwrap();
    let big_g = HyperarcFunction::new(vec![2.0, -1.0, 0.5]).unwrap();
    let cfg = OperatorConfig::default();

    // Vertex calculus: functions on vertices, gradients on hyperarcs.
    let grad = vertex_gradient(&h, &w, &cfg, &f).unwrap();
    println!("vertex gradient per arc: {:?}", grad.values());
    let div = vertex_divergence(&h, &w, &cfg, &grad).unwrap();
    println!("divergence of that:      {:?}", div.values());
    let lap = vertex_laplacian(&h, &w, &cfg, &f, Method::Composed).unwrap();
    assert_eq!(lap.values(), div.values());

    // ⟨G, ∇f⟩ = ⟨f, ∇*G⟩: the adjoint is exact under the weighted pairings.
    let adj = vertex_adjoint(&h, &w, &cfg, &big_g).unwrap();
    let lhs = hyperarc_inner_product(&big_g, &grad, &w, cfg.beta).unwrap();
    let rhs = vertex_inner_product(&f, &adj, &w, cfg.alpha).unwrap();
    println!("duality: {lhs:.12} = {rhs:.12}");
    assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(rhs.abs()));

    // p-Laplacians for a few p; p = 2 is the plain Laplacian.
    for p in [1.5, 2.0, 3.0] {
        let plap = vertex_p_laplacian(&h, &w, &cfg, &f, p, Method::Composed).unwrap();
        println!("{p}-laplacian: {:?}", plap.values());
        if p == 2.0 {
            let drift: f64 = plap
                .values()
                .iter()
                .zip(lap.values())
                .map(|(a, b)| (a - b).abs())
                .sum();
            assert!(drift <= 1e-12);
        }
    }

    // Explicit closed forms match the composed evaluation in default modes.
    let explicit = vertex_p_laplacian(&h, &w, &cfg, &f, 2.5, Method::Explicit).unwrap();
    let composed = vertex_p_laplacian(&h, &w, &cfg, &f, 2.5, Method::Composed).unwrap();
    for (a, b) in explicit.values().iter().zip(composed.values()) {
        assert!((a - b).abs() <= 1e-12 + 1e-9 * a.abs().max(b.abs()));
    }
    println!("explicit 2.5-laplacian agrees with composition");

    // The hyperarc calculus runs the other way: functions on hyperarcs,
    // gradients on vertices.
    let agrad = hyperarc_gradient(&h, &w, &cfg, &big_g).unwrap();
    println!("\nhyperarc gradient per vertex: {:?}", agrad.values());
    let alap = hyperarc_laplacian(&h, &w, &cfg, &big_g, Method::Composed).unwrap();
    println!("hyperarc laplacian:           {:?}", alap.values());
    let aplap = hyperarc_p_laplacian(&h, &w, &cfg, &big_g, 3.0, Method::Composed).unwrap();
    println!("hyperarc 3-laplacian:         {:?}", aplap.values());

    // Every exponent and normalization mode is tunable.
    let tuned = OperatorConfig {
        alpha: 0.5,
        gamma: -1.0,
        vertex_cardinality_mode: VertexCardinalityMode::Unit,
        vertex_adjoint_mode: VertexAdjointMode::NegatedTotalDegree,
        ..OperatorConfig::default()
    };
    let tuned_lap = vertex_laplacian(&h, &w, &tuned, &f, Method::Composed).unwrap();
    println!("\nretuned laplacian: {:?}", tuned_lap.values());
}
