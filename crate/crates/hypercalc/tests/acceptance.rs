//! Acceptance gate: twelve criteria, one test each, at their stated
//! tolerances and instance counts. Random criteria run through the seeded
//! property suites so a failure prints a replayable witness.

use hypercalc::format::{write_hypergraph_oriented, write_tensor};
use hypercalc::random::random_instance;
use hypercalc::suite::{run_suite, SuiteKind};
use hypercalc::{
    adjacency_matrix_oriented, count_feasible, decode_tensor_oriented, encode_tensor_oriented,
    entry_value, index_count, property_suite, AlgebraicError, DecodeStrategy, EntryMode,
    FeasibleKind, OrientedHypergraph, OrientedNormalGraph, Rational,
};

const SEED: u64 = 42;

fn assert_suite(kind: SuiteKind, trials: u32) {
    let report = run_suite(kind, SEED, trials);
    assert!(
        report.all_passed(),
        "{} suite failed:\n{}",
        kind.name(),
        report.render()
    );
}

/// ⟨G, ∇_v f⟩ = ⟨f, ∇*_v G⟩ and ⟨f, ∇_a G⟩ = ⟨G, ∇*_a f⟩ on 200 seeded
/// weighted instances (N ≤ 10, M ≤ 15, exponents in [−1, 1]), rel. 1e-9.
#[test]
fn criterion_01_duality() {
    assert_suite(SuiteKind::Duality, 200);
}

/// Δ = div∘∇ and Δᵖ = div(|∇|^{p−2}∇), p ∈ {1.5, 2, 2.5, 3}, every mode
/// combination, 200 instances, 1e-9; explicit forms agree in default modes.
#[test]
fn criterion_02_composition() {
    assert_suite(SuiteKind::Composition, 200);
}

/// The p = 2 p-Laplacian equals the Laplacian to 1e-12 on every instance.
#[test]
fn criterion_03_p2_collapse() {
    let report = run_suite(SuiteKind::Composition, SEED, 200);
    let outcome = report
        .outcomes
        .iter()
        .find(|o| o.property == "the 2-laplacian is the laplacian")
        .expect("the collapse property is part of the composition suite");
    assert!(
        outcome.passed,
        "{}",
        outcome.counterexample.as_deref().unwrap_or("failed")
    );
}

/// On 200 random oriented normal graphs, every hypergraph operator applied
/// to the embedding equals the graph reference formula to 1e-9.
#[test]
fn criterion_04_graph_reduction() {
    assert_suite(SuiteKind::Reduction, 200);
}

/// Jost presets equal the independent closed forms to 1e-10 on 100
/// instances; the graph-vertex preset gradient is exactly √W_G·Δf.
#[test]
fn criterion_05_presets() {
    assert_suite(SuiteKind::Presets, 100);
}

/// The worked 6-vertex encoding reproduces the printed entries; a normal
/// graph's order-2 tensor is its adjacency matrix; entry_value(2,2,Full)=1.
#[test]
fn criterion_06_tensor_fixtures() {
    let h = OrientedHypergraph::build(
        6,
        [(vec![1, 2], vec![4]), (vec![3], vec![2, 6]), (vec![5], vec![6])],
    )
    .unwrap();
    let t = encode_tensor_oriented(&h, EntryMode::Simplified, false).unwrap();
    let entries: Vec<(Vec<u32>, Rational)> =
        t.entries().map(|(idx, v)| (idx.to_vec(), v)).collect();
    assert_eq!(
        entries,
        [
            (vec![1, 2, 4], Rational::new(3, 2)),
            (vec![2, 1, 4], Rational::new(3, 2)),
            (vec![3, 2, 6], Rational::new(3, 2)),
            (vec![3, 6, 2], Rational::new(3, 2)),
            (vec![5, 5, 6], Rational::new(1, 1)),
            (vec![5, 6, 6], Rational::new(1, 1)),
        ]
    );

    assert_eq!(entry_value(2, 2, EntryMode::Full).unwrap(), Rational::new(1, 1));

    for seed in 0..50u64 {
        let g = random_graph(seed);
        let t = encode_tensor_oriented(&g.as_hypergraph(), EntryMode::Full, false).unwrap();
        assert_eq!(t.order(), 2, "seed {seed}");
        let a = adjacency_matrix_oriented(&g);
        for i in g.vertices() {
            for j in g.vertices() {
                let expected = if a.entry(i, j) == 1 {
                    Some(Rational::new(1, 1))
                } else {
                    None
                };
                assert_eq!(t.value(&[i.get(), j.get()]), expected, "seed {seed}");
            }
        }
        assert_eq!(t.len() as usize, g.arc_count(), "seed {seed}");
    }
}

/// decode(encode(H)) = H on 200 increased-order tensors (N ≤ 6, max_a ≤ 4);
/// standard-order strict decode returns the source whenever it completes;
/// the colliding 4-vertex pair shares one tensor and strict decode says so.
#[test]
fn criterion_07_tensor_roundtrip() {
    for seed in 0..200u64 {
        let h = random_instance(seed, 6, 4, 4).expect("bounds are feasible");
        for mode in [EntryMode::Simplified, EntryMode::Full] {
            let t = encode_tensor_oriented(&h, mode, true).unwrap();
            let back = decode_tensor_oriented(&t, DecodeStrategy::Strict)
                .unwrap_or_else(|e| panic!("seed {seed}: {e}\n{}", write_hypergraph_oriented(&h)));
            assert_eq!(
                sorted_arcs(&back),
                sorted_arcs(&h),
                "seed {seed} mode {mode:?}"
            );
        }

        let t = encode_tensor_oriented(&h, EntryMode::Simplified, false).unwrap();
        match decode_tensor_oriented(&t, DecodeStrategy::Strict) {
            Ok(back) => assert_eq!(sorted_arcs(&back), sorted_arcs(&h), "seed {seed}"),
            Err(AlgebraicError::AmbiguousTensor { .. }) => {}
            Err(e) => panic!("seed {seed}: unexpected decode failure {e}"),
        }
    }

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
    assert_eq!(t1, t2, "the counterexample pair must collide");
    assert_eq!(write_tensor(&t1), write_tensor(&t2));
    assert!(matches!(
        decode_tensor_oriented(&t1, DecodeStrategy::Strict),
        Err(AlgebraicError::AmbiguousTensor { .. })
    ));
}

/// Tuple counts per hyperarc match the closed forms exhaustively for
/// n ∈ {max_a − 1, max_a} and max_a ≤ 5.
#[test]
fn criterion_08_index_counts() {
    for max_a in 2..=5usize {
        for n in [max_a - 1, max_a] {
            if n < 2 {
                continue;
            }
            for out in 1..n {
                let in_ = n - out;
                assert_eq!(
                    index_count(out, in_, max_a).unwrap(),
                    enumerated_entry_count(out, in_, max_a),
                    "index_count({out}, {in_}, {max_a})"
                );
            }
        }
    }
}

/// Star expansions 2-color; anchored reconstruction inverts 200 random
/// expansions; the printed star and clique counterexamples collide; clique
/// multiplicities count memberships; clique_edge_count matches enumeration.
#[test]
fn criterion_09_representations() {
    assert_suite(SuiteKind::Representation, 200);
}

/// Feasibility counts match brute force (N ≤ 5), stay under N^N (N ≤ 12),
/// and count_feasible(hyperedges, 4) = 11.
#[test]
fn criterion_10_counting() {
    assert_suite(SuiteKind::Counting, 1);
    assert_eq!(
        count_feasible(FeasibleKind::Hyperedges, 4).unwrap().to_string(),
        "11"
    );
}

/// Constant-function gradients vanish to exact zero under compatible
/// weights; switching the orientation negates gradients to 1e-12.
#[test]
fn criterion_11_gradient_properties() {
    assert_suite(SuiteKind::Gradients, 200);
}

/// Reports and serializations are byte-identical across same-seed runs.
#[test]
fn criterion_12_determinism() {
    let a = property_suite(SEED, 25);
    let b = property_suite(SEED, 25);
    assert_eq!(a.render(), b.render());
    assert!(a.all_passed(), "\n{}", a.render());

    for seed in 0..50u64 {
        let h1 = random_instance(seed, 9, 12, 5).unwrap();
        let h2 = random_instance(seed, 9, 12, 5).unwrap();
        assert_eq!(
            write_hypergraph_oriented(&h1),
            write_hypergraph_oriented(&h2),
            "seed {seed}"
        );
        let t1 = encode_tensor_oriented(&h1, EntryMode::Simplified, false).unwrap();
        let t2 = encode_tensor_oriented(&h2, EntryMode::Simplified, false).unwrap();
        assert_eq!(write_tensor(&t1), write_tensor(&t2), "seed {seed}");
    }
}

// ---------------------------------------------------------------- helpers --

fn sorted_arcs(h: &OrientedHypergraph) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut arcs: Vec<(Vec<u32>, Vec<u32>)> = h
        .hyperarcs()
        .iter()
        .map(|arc| {
            (
                arc.out_set().iter().map(|v| v.get()).collect(),
                arc.in_set().iter().map(|v| v.get()).collect(),
            )
        })
        .collect();
    arcs.sort();
    arcs
}

fn random_graph(seed: u64) -> OrientedNormalGraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n: u32 = rng.random_range(2..=8);
    let mut seen = std::collections::HashSet::new();
    let mut arcs = vec![(1u32, 2u32)];
    seen.insert((1u32, 2u32));
    for _ in 0..rng.random_range(0..=12usize) {
        let t = rng.random_range(1..=n);
        let h = rng.random_range(1..=n);
        if t != h && seen.insert((t, h)) {
            arcs.push((t, h));
        }
    }
    OrientedNormalGraph::build(n, arcs).expect("proper distinct arcs")
}

/// The arc under count lives on vertices 1..=n; when n < max_a a disjoint
/// pinning arc of cardinality max_a fixes the tensor order, and
/// disjointness lets the two arcs' entries be told apart by their indices.
fn enumerated_entry_count(out: usize, in_: usize, max_a: usize) -> u64 {
    let n = out + in_;
    let mut arcs = vec![(
        (1..=out as u32).collect::<Vec<u32>>(),
        (out as u32 + 1..=n as u32).collect::<Vec<u32>>(),
    )];
    let mut total = n as u32;
    if n < max_a {
        let lo = n as u32 + 1;
        let hi = n as u32 + max_a as u32;
        arcs.push((vec![lo], (lo + 1..=hi).collect()));
        total = hi;
    }
    let h = OrientedHypergraph::build(total, arcs).unwrap();
    let t = encode_tensor_oriented(&h, EntryMode::Simplified, false).unwrap();
    assert_eq!(t.order(), max_a);
    t.entries()
        .filter(|(idx, _)| idx.iter().all(|&i| i as usize <= n))
        .count() as u64
}
