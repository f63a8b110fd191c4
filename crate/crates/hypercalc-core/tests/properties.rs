//! Structural invariants checked over randomized hypergraphs:
//! orientation switching is an involution, degrees count incident
//! hyperarcs without double counting, and indicator column sums equal
//! side cardinalities.

use proptest::collection::vec;
use proptest::prelude::*;

use hypercalc_core::{OrientedHypergraph, VertexId};

/// Raw material for one hyperarc over `n` vertices: an assignment of each
/// vertex to out (0), in (1), or neither (2+). Assignments with an empty
/// side are discarded during construction.
fn arcs_strategy(n: u32) -> impl Strategy<Value = Vec<(Vec<u32>, Vec<u32>)>> {
    vec(vec(0u8..4, n as usize), 0..12).prop_map(move |assignments| {
        let mut arcs = Vec::new();
        for assignment in assignments {
            let side = |tag: u8| -> Vec<u32> {
                assignment
                    .iter()
                    .enumerate()
                    .filter(|&(_, &t)| t == tag)
                    .map(|(i, _)| i as u32 + 1)
                    .collect()
            };
            let (out, in_) = (side(0), side(1));
            if !out.is_empty() && !in_.is_empty() {
                arcs.push((out, in_));
            }
        }
        // Duplicates would be rejected by the constructor; drop them here so
        // every generated instance is valid.
        arcs.dedup();
        let mut seen = std::collections::HashSet::new();
        arcs.retain(|arc| seen.insert(arc.clone()));
        arcs
    })
}

fn hypergraph_strategy() -> impl Strategy<Value = OrientedHypergraph> {
    (2u32..9).prop_flat_map(|n| {
        arcs_strategy(n).prop_map(move |arcs| OrientedHypergraph::build(n, arcs).unwrap())
    })
}

proptest! {
    #[test]
    fn switching_is_an_involution(h in hypergraph_strategy()) {
        let switched = h.switched();
        prop_assert_eq!(switched.vertex_count(), h.vertex_count());
        prop_assert_eq!(switched.hyperarc_count(), h.hyperarc_count());
        for (a, b) in h.hyperarcs().iter().zip(switched.hyperarcs()) {
            prop_assert_eq!(a.cardinality(), b.cardinality());
            prop_assert_eq!(a.out_set(), b.in_set());
        }
        prop_assert_eq!(&switched.switched(), &h);
    }

    #[test]
    fn degrees_count_incident_hyperarcs(h in hypergraph_strategy()) {
        for v in h.vertices() {
            let by_enumeration = h
                .hyperarcs()
                .iter()
                .filter(|a| a.contains(v))
                .count() as u32;
            prop_assert_eq!(h.degree(v), by_enumeration);
            prop_assert_eq!(h.degree_out(v) + h.degree_in(v), h.degree(v));
        }
    }

    #[test]
    fn indicator_sums_match_side_cardinalities(h in hypergraph_strategy()) {
        for (q, arc) in h.hyperarcs().iter().enumerate() {
            let out_sum = h.vertices().filter(|&v| h.delta_out(v, q)).count();
            let in_sum = h.vertices().filter(|&v| h.delta_in(v, q)).count();
            prop_assert_eq!(out_sum, arc.out_set().len());
            prop_assert_eq!(in_sum, arc.in_set().len());
        }
    }

    #[test]
    fn switching_swaps_degree_kinds(h in hypergraph_strategy()) {
        let s = h.switched();
        for v in h.vertices() {
            prop_assert_eq!(s.degree_out(v), h.degree_in(v));
            prop_assert_eq!(s.degree_in(v), h.degree_out(v));
            prop_assert_eq!(s.degree(v), h.degree(v));
        }
    }

    #[test]
    fn graph_embedding_degrees_agree(
        arcs in vec((1u32..7, 1u32..7), 0..10)
    ) {
        let mut seen = std::collections::HashSet::new();
        let arcs: Vec<(u32, u32)> = arcs
            .into_iter()
            .filter(|&(t, g)| t != g && seen.insert((t, g)))
            .collect();
        let g = hypercalc_core::OrientedNormalGraph::build(6, arcs).unwrap();
        let h = g.as_hypergraph();
        for i in 1..=6 {
            let v = VertexId::new(i);
            prop_assert_eq!(h.degree_out(v), g.degree_out(v));
            prop_assert_eq!(h.degree_in(v), g.degree_in(v));
            prop_assert_eq!(h.degree(v), g.degree(v));
        }
    }
}
