//! The plain-text document formats: write and parse hypergraphs, weights,
//! functions, tensors, bipartite graphs, anchors, and multigraphs. Every
//! writer emits a canonical form, and parsing is whitespace- and
//! comment-tolerant.

use hypercalc::format::{
    parse_anchors, parse_function, parse_hypergraph, parse_tensor, parse_weights, write_anchors,
    write_hypergraph_oriented, write_multigraph, write_tensor, write_weights,
};
use hypercalc::{
    encode_tensor_oriented, to_bipartite_oriented, to_clique_oriented, EntryMode,
    OrientedHypergraph, WeightAssignment,
};

fn main() {
    let h = OrientedHypergraph::build(
        5,
        [(vec![1, 2], vec![4]), (vec![3], vec![2, 5])],
    )
    .unwrap();

    let text = write_hypergraph_oriented(&h);
    println!("hypergraph document:\n{text}");

    // Parsing tolerates comments, blank lines, and ragged spacing, and
    // rewriting lands back on the canonical text.
    let scruffy = "# a comment\nhypergraph   oriented\n\nvertices 5\narc  out 2 1  in 4\narc out 3 in 5 2\n";
    let parsed = parse_hypergraph(scruffy).unwrap().oriented().unwrap().clone();
    assert_eq!(parsed, h);
    assert_eq!(write_hypergraph_oriented(&parsed), text);
    println!("scruffy input parses to the same canonical form\n");

    let w = WeightAssignment::uniform(5, 2)
        .with_w_i(vec![1.0, 2.0, 0.5, 1.0, 1.0])
        .unwrap()
        .with_big_w_g(vec![4.0, 2.25])
        .unwrap();
    let wtext = write_weights(&w);
    println!("weights document:\n{wtext}");
    let wback = parse_weights(&wtext).unwrap().into_assignment(5, 2).unwrap();
    assert_eq!(wback, w);

    let ftext = "vertexfn\n1 1.5\n2 -2\n3 0.25\n4 0\n5 3\n";
    let f = parse_function(ftext).unwrap().into_vertex_function(5).unwrap();
    println!("function document parses to {:?}\n", f.values());

    // Tensors serialize entry-per-line with exact rational values.
    let t = encode_tensor_oriented(&h, EntryMode::Simplified, false).unwrap();
    let ttext = write_tensor(&t);
    println!("tensor document:\n{ttext}");
    assert_eq!(parse_tensor(&ttext).unwrap(), t);

    // Star expansions produce a graph document plus an anchors sidecar;
    // together they rebuild the hypergraph, so both formats roundtrip.
    let star = to_bipartite_oriented(&h);
    let atext = write_anchors(star.anchors());
    println!("anchors sidecar:\n{atext}");
    assert_eq!(&parse_anchors(&atext).unwrap(), star.anchors());

    let m = to_clique_oriented(&h);
    println!("multigraph document:\n{}", write_multigraph(&m));

    // Writers are deterministic: same value, same bytes, every time.
    assert_eq!(write_hypergraph_oriented(&h), text);
    assert_eq!(write_weights(&w), wtext);
    println!("all writers are byte-deterministic");
}
