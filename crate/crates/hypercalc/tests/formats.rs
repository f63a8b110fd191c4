//! Roundtrip and determinism laws for every text format, driven by the
//! crate's own seeded instance generator so the exercised values include
//! arbitrary binary floats.

use hypercalc::format::{
    parse_anchors, parse_function, parse_graph, parse_hypergraph, parse_multigraph, parse_tensor,
    parse_weights, write_anchors, write_graph_oriented, write_graph_unoriented,
    write_hyperarc_function, write_hypergraph_oriented, write_hypergraph_unoriented,
    write_multigraph, write_tensor, write_vertex_function, write_weights, FunctionDocument,
    WeightsDocument,
};
use hypercalc::random::{
    draw_hyperarc_function, draw_vertex_function, draw_weights, random_instance,
};
use hypercalc::{
    encode_tensor_oriented, to_bipartite_oriented, to_bipartite_unoriented, to_clique_oriented,
    EntryMode, OrientedHypergraph, UnorientedHypergraph,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instances() -> impl Iterator<Item = (u64, OrientedHypergraph)> {
    (0..200u64).map(|seed| {
        (
            seed,
            random_instance(seed, 9, 12, 5).expect("bounds are feasible"),
        )
    })
}

fn unoriented_of(h: &OrientedHypergraph) -> UnorientedHypergraph {
    let mut seen = std::collections::HashSet::new();
    let edges: Vec<Vec<u32>> = h
        .hyperarcs()
        .iter()
        .map(|arc| {
            let mut members: Vec<u32> = arc.vertices().map(|v| v.get()).collect();
            members.sort_unstable();
            members
        })
        .filter(|members| seen.insert(members.clone()))
        .collect();
    UnorientedHypergraph::build(h.vertex_count(), edges).expect("unions are valid hyperedges")
}

#[test]
fn hypergraph_documents_roundtrip_and_stay_canonical() {
    for (seed, h) in instances() {
        let text = write_hypergraph_oriented(&h);
        let doc = parse_hypergraph(&text).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(doc.oriented(), Some(&h), "seed {seed}");
        assert_eq!(doc.write(), text, "seed {seed}: canonical form must be a fixpoint");

        let u = unoriented_of(&h);
        let text = write_hypergraph_unoriented(&u);
        let doc = parse_hypergraph(&text).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(doc.unoriented(), Some(&u), "seed {seed}");
        assert_eq!(doc.write(), text, "seed {seed}");
    }
}

#[test]
fn weights_documents_roundtrip_value_exactly() {
    for (seed, h) in instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let w = draw_weights(&mut rng, h.vertex_count(), h.hyperarc_count());
        let text = write_weights(&WeightsDocument::from_assignment(&w));
        let back = parse_weights(&text)
            .unwrap_or_else(|e| panic!("seed {seed}: {e}"))
            .into_assignment(h.vertex_count(), h.hyperarc_count())
            .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(back, w, "seed {seed}: weights must roundtrip bit-exactly");
    }
}

#[test]
fn function_documents_roundtrip_value_exactly() {
    for (seed, h) in instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xf00d);
        let f = draw_vertex_function(&mut rng, h.vertex_count());
        let text = write_vertex_function(&f);
        let back = parse_function(&text)
            .unwrap_or_else(|e| panic!("seed {seed}: {e}"))
            .into_vertex_function(h.vertex_count())
            .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(back, f, "seed {seed}");

        let big_f = draw_hyperarc_function(&mut rng, h.hyperarc_count());
        let text = write_hyperarc_function(&big_f);
        let back = parse_function(&text)
            .unwrap_or_else(|e| panic!("seed {seed}: {e}"))
            .into_hyperarc_function(h.hyperarc_count())
            .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(back, big_f, "seed {seed}");
    }
}

#[test]
fn function_documents_rebuild_from_structures() {
    let f = hypercalc::VertexFunction::new(vec![1.0, -2.5, 0.125]).unwrap();
    let doc = FunctionDocument::from_vertex_function(&f);
    assert_eq!(doc.into_vertex_function(3).unwrap(), f);
}

#[test]
fn tensor_documents_roundtrip() {
    for (seed, h) in instances().take(80) {
        for mode in [EntryMode::Simplified, EntryMode::Full] {
            let t = encode_tensor_oriented(&h, mode, false)
                .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            let text = write_tensor(&t);
            let back = parse_tensor(&text).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert_eq!(back, t, "seed {seed} mode {mode:?}");
            assert_eq!(write_tensor(&back), text, "seed {seed}");
        }
    }
}

#[test]
fn graph_multigraph_and_anchor_documents_roundtrip() {
    for (seed, h) in instances().take(80) {
        let x = to_bipartite_oriented(&h);
        let text = write_graph_oriented(x.graph());
        let doc = parse_graph(&text).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(doc.oriented(), Some(x.graph()), "seed {seed}");

        let anchors = write_anchors(x.anchors());
        let hints = parse_anchors(&anchors).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(&hints, x.anchors(), "seed {seed}");

        let u = unoriented_of(&h);
        let x = to_bipartite_unoriented(&u);
        let text = write_graph_unoriented(x.graph());
        let doc = parse_graph(&text).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(doc.unoriented(), Some(x.graph()), "seed {seed}");

        let g = to_clique_oriented(&h);
        let text = write_multigraph(&g);
        let back = parse_multigraph(&text).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(back, g, "seed {seed}");
    }
}

#[test]
fn serializations_are_byte_deterministic() {
    for (seed, h) in instances().take(50) {
        assert_eq!(
            write_hypergraph_oriented(&h),
            write_hypergraph_oriented(&h.clone()),
            "seed {seed}"
        );
        let t = encode_tensor_oriented(&h, EntryMode::Simplified, false).unwrap();
        assert_eq!(write_tensor(&t), write_tensor(&t.clone()), "seed {seed}");
    }
}
