//! Build oriented and unoriented hypergraphs, inspect degrees and
//! cardinalities, switch orientations, and print incidence matrices.

use hypercalc::{
    connected_components_oriented, incidence_matrix_oriented, incidence_matrix_unoriented,
    OrientedHypergraph, OrientedNormalGraph, UnorientedHypergraph,
};

fn main() {
    // Eight vertices, three hyperarcs; vertex 4 stays isolated.
    let h = OrientedHypergraph::build(
        8,
        [
            (vec![1, 2], vec![5]),
            (vec![3], vec![2, 7, 8]),
            (vec![6], vec![7]),
        ],
    )
    .unwrap();

    println!(
        "oriented: {} vertices, {} hyperarcs",
        h.vertex_count(),
        h.hyperarc_count()
    );
    let (lo, hi) = h.cardinality_bounds().unwrap();
    println!("cardinalities span {lo}..={hi}");
    for v in h.vertices() {
        println!(
            "  degree {} total {} out {} in {}",
            v.get(),
            h.degree(v),
            h.degree_out(v),
            h.degree_in(v)
        );
    }

    // Switching swaps every arc's sides; twice is the identity.
    let switched = h.switched();
    assert_eq!(switched.switched(), h);
    println!("\nswitched arcs:");
    for arc in switched.hyperarcs() {
        let out: Vec<u32> = arc.out_set().iter().map(|v| v.get()).collect();
        let in_: Vec<u32> = arc.in_set().iter().map(|v| v.get()).collect();
        println!("  out {out:?} in {in_:?}");
    }

    // Incidence rows: +1 out, −1 in (oriented); 1 membership (unoriented).
    let inc = incidence_matrix_oriented(&h);
    println!("\noriented incidence ({} rows):", inc.rows());
    for v in h.vertices() {
        let row: Vec<String> = inc.row(v).iter().map(|x| x.to_string()).collect();
        println!("  {}", row.join(" "));
    }

    let u = UnorientedHypergraph::build(8, [vec![1, 2, 5], vec![2, 3, 7, 8], vec![6, 7]]).unwrap();
    let inc = incidence_matrix_unoriented(&u);
    println!("\nunoriented incidence:");
    for v in u.vertices() {
        let row: Vec<String> = inc.row(v).iter().map(|x| x.to_string()).collect();
        println!("  {}", row.join(" "));
    }

    // A hypergraph whose arcs are all singleton→singleton is a normal
    // graph and converts losslessly.
    let g = OrientedNormalGraph::build(5, [(1, 2), (2, 3), (3, 1), (4, 5)]).unwrap();
    let as_h = g.as_hypergraph();
    assert!(as_h.is_normal_graph());
    assert_eq!(OrientedNormalGraph::from_hypergraph(&as_h), Some(g.clone()));
    println!("\ngraph embeds and converts back: {} arcs", g.arc_count());

    for c in connected_components_oriented(&g) {
        let members: Vec<u32> = c.vertices.iter().map(|v| v.get()).collect();
        println!(
            "  component {members:?} bipartite: {}",
            c.bipartition.is_some()
        );
    }
}
