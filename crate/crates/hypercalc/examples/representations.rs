//! Hypergraphs as graphs: star expansions into bipartite graphs (with the
//! anchors that make them invertible), clique expansions into multigraphs,
//! the collisions both suffer without anchors, and feasibility counts.

use hypercalc::{
    clique_edge_count_unoriented, connected_components_unoriented, count_feasible,
    from_bipartite_unoriented, infer_anchors_unoriented, to_bipartite_unoriented,
    to_clique_unoriented, AnchorHint, AnchorHints, FeasibleKind, UnorientedHypergraph, VertexId,
    VertexRole,
};

fn main() {
    // Four triples on six vertices — a 2-design whose star expansion is
    // famously symmetric between the two sides.
    let triples =
        UnorientedHypergraph::build(6, [vec![1, 2, 3], vec![1, 4, 5], vec![2, 4, 6], vec![3, 5, 6]])
            .unwrap();
    let star = to_bipartite_unoriented(&triples);
    let g = star.graph();
    println!(
        "star expansion: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );

    // Star expansions are always bipartite.
    for c in connected_components_unoriented(g) {
        assert!(c.bipartition.is_some());
    }
    println!("every component 2-colors");

    // With its anchors the expansion inverts exactly.
    let back = from_bipartite_unoriented(g, star.anchors()).unwrap();
    assert_eq!(back.hypergraph, triples);
    println!("anchored reconstruction returns the original");

    // Without anchors this graph reads two ways: anchor vertex 1 as an
    // original and the triples return; anchor it as an encoder and the
    // same graph decodes as the six pairs of K4.
    let one = VertexId::new(1);
    let original = AnchorHints::new(vec![AnchorHint::new(one, VertexRole::Original)]);
    let encoder = AnchorHints::new(vec![AnchorHint::new(one, VertexRole::Encoder)]);
    let reading_a = from_bipartite_unoriented(g, &original).unwrap();
    let reading_b = from_bipartite_unoriented(g, &encoder).unwrap();
    println!(
        "\nsame graph, two readings: {} triples vs {} pairs",
        reading_a.hypergraph.hyperedge_count(),
        reading_b.hypergraph.hyperedge_count()
    );
    assert_eq!(reading_a.hypergraph.hyperedge_count(), 4);
    assert_eq!(reading_b.hypergraph.hyperedge_count(), 6);

    // Cardinality bounds can break the tie: if hyperedges have 3..=3
    // members, only one reading survives and inference resolves it.
    let inferred = infer_anchors_unoriented(g, 3, 3);
    assert!(inferred.unresolved.is_empty());
    assert_eq!(inferred.anchors, original);
    println!("cardinality bounds 3..=3 resolve the anchors automatically");
    let loose = infer_anchors_unoriented(g, 2, 3);
    println!(
        "bounds 2..=3 leave {} component(s) unresolved",
        loose.unresolved.len()
    );

    // Clique expansions lose even more: these two hypergraphs share one
    // multigraph.
    let triples4 =
        UnorientedHypergraph::build(4, [vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]]).unwrap();
    let star4 =
        UnorientedHypergraph::build(4, [vec![1, 2], vec![1, 3], vec![1, 4], vec![1, 2, 3, 4]])
            .unwrap();
    let m1 = to_clique_unoriented(&triples4);
    let m2 = to_clique_unoriented(&star4);
    assert_eq!(m1, m2);
    println!("\nclique multigraph collision:");
    for ((a, b), count) in m1.entries() {
        println!("  {{{a}, {b}}} × {count}");
    }

    // Multiplicity counts covering hyperedges; a lone hyperedge of size k
    // contributes C(k, 2) edges.
    assert_eq!(m1.multiplicity(VertexId::new(1), VertexId::new(2)), 2);
    for k in 2..=6usize {
        println!(
            "clique edges of a {k}-member hyperedge: {}",
            clique_edge_count_unoriented(k).unwrap()
        );
    }

    // How many hyperedges / hyperarcs exist at all on n vertices.
    println!("\nfeasible counts:");
    for n in 2..=8u32 {
        println!(
            "  n={n}: {} hyperedges, {} hyperarcs",
            count_feasible(FeasibleKind::Hyperedges, n).unwrap(),
            count_feasible(FeasibleKind::Hyperarcs, n).unwrap()
        );
    }
}
