//! Hypergraphs as sparse symmetric tensors: encoding, the entry shares,
//! decoding back, a genuinely ambiguous tensor, and the increased-order
//! encoding that removes the ambiguity.

use hypercalc::{
    adjacency_matrix_oriented, decode_tensor_oriented, encode_tensor_oriented, entry_value,
    index_count, AlgebraicError, DecodeStrategy, EntryMode, OrientedHypergraph,
    OrientedNormalGraph,
};

fn main() {
    // Three hyperarcs on six vertices; the tensor order is the largest
    // cardinality (3), and smaller arcs pad by repeating an out-vertex.
    let h = OrientedHypergraph::build(
        6,
        [(vec![1, 2], vec![4]), (vec![3], vec![2, 6]), (vec![5], vec![6])],
    )
    .unwrap();
    let t = encode_tensor_oriented(&h, EntryMode::Simplified, false).unwrap();
    println!("order-{} tensor, {} stored entries:", t.order(), t.len());
    for (idx, value) in t.entries() {
        println!("  {idx:?} = {value}");
    }

    // Entry shares distribute 1 across the permutations of each arc.
    for (n, order, mode) in [
        (2, 2, EntryMode::Full),
        (3, 3, EntryMode::Simplified),
        (2, 3, EntryMode::Full),
    ] {
        println!(
            "entry share (n={n}, order={order}, {mode:?}) = {}",
            entry_value(n, order, mode).unwrap()
        );
    }
    // How many tuples a single (out, in) arc contributes at a given order.
    for (out, in_, max_a) in [(1, 1, 2), (2, 1, 3), (1, 2, 3), (2, 2, 4), (1, 1, 3)] {
        println!(
            "index count out={out} in={in_} order={max_a}: {}",
            index_count(out, in_, max_a).unwrap()
        );
    }

    // Decoding inverts the encoding here.
    let back = decode_tensor_oriented(&t, DecodeStrategy::Strict).unwrap();
    assert_eq!(back.hyperarc_count(), h.hyperarc_count());
    println!("\nstrict decode recovers all {} arcs", back.hyperarc_count());

    // Two different hypergraphs with the same standard-order tensor: the
    // all-splits arcs of K4 versus its four singleton-out stars.
    let pairs = OrientedHypergraph::build(
        4,
        [
            (vec![1, 2], vec![3, 4]),
            (vec![1, 3], vec![2, 4]),
            (vec![1, 4], vec![2, 3]),
            (vec![2, 3], vec![1, 4]),
            (vec![2, 4], vec![1, 3]),
            (vec![3, 4], vec![1, 2]),
        ],
    )
    .unwrap();
    let singletons = OrientedHypergraph::build(
        4,
        [
            (vec![1], vec![2, 3, 4]),
            (vec![2], vec![1, 3, 4]),
            (vec![3], vec![1, 2, 4]),
            (vec![4], vec![1, 2, 3]),
        ],
    )
    .unwrap();
    let t1 = encode_tensor_oriented(&pairs, EntryMode::Simplified, false).unwrap();
    let t2 = encode_tensor_oriented(&singletons, EntryMode::Simplified, false).unwrap();
    assert_eq!(t1, t2);
    println!("\ntwo hypergraphs, one tensor ({} entries)", t1.len());

    match decode_tensor_oriented(&t1, DecodeStrategy::Strict) {
        Err(AlgebraicError::AmbiguousTensor { candidates }) => {
            println!("strict decode stalls: {} candidate arcs remain", candidates.len());
        }
        other => panic!("expected ambiguity, got {other:?}"),
    }
    // Greedy commits to maximal out-sides and lands on one of the readings.
    let greedy = decode_tensor_oriented(&t1, DecodeStrategy::Greedy).unwrap();
    println!("greedy decode picks {} arcs", greedy.hyperarc_count());

    // Raising the order by one restores uniqueness for every hypergraph.
    let t_up = encode_tensor_oriented(&pairs, EntryMode::Simplified, true).unwrap();
    let back = decode_tensor_oriented(&t_up, DecodeStrategy::Strict).unwrap();
    assert_eq!(back.hyperarc_count(), pairs.hyperarc_count());
    println!(
        "increased-order tensor (order {}) decodes uniquely",
        t_up.order()
    );

    // On a normal graph the order-2 tensor is the adjacency matrix.
    let g = OrientedNormalGraph::build(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
    let t = encode_tensor_oriented(&g.as_hypergraph(), EntryMode::Full, false).unwrap();
    let a = adjacency_matrix_oriented(&g);
    for i in g.vertices() {
        for j in g.vertices() {
            assert_eq!(t.value(&[i.get(), j.get()]).is_some(), a.entry(i, j) == 1);
        }
    }
    println!("\na normal graph's order-2 tensor is its adjacency matrix");
}
