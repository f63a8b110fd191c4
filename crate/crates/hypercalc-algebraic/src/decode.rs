use std::collections::{BTreeMap, BTreeSet};

use hypercalc_core::{OrientedHypergraph, UnorientedHypergraph};
use num_traits::Zero;

use crate::error::AlgebraicError;
use crate::tensor::{
    encode_oriented_at_order, encode_unoriented_at_order, entry_value, Rational,
    SparseAdjacencyTensor,
};

/// Orders above this are refused before any enumeration starts.
const MAX_DECODE_ORDER: usize = 8;

/// How decoding reacts when the entries do not force a unique hypergraph.
/// `Strict` reports the surviving candidates; `Greedy` commits to the
/// lexicographically first one and backtracks on contradiction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecodeStrategy {
    #[default]
    Strict,
    Greedy,
}

type ArcSides = (Vec<u32>, Vec<u32>);

/// Number of nonzero entries a single hyperarc with the given side sizes
/// produces in a tensor of order `max_a`. Closed forms exist for
/// cardinalities max_a and max_a − 1 only.
pub fn index_count(
    out_size: usize,
    in_size: usize,
    max_a: usize,
) -> Result<u64, AlgebraicError> {
    let n = out_size + in_size;
    if out_size == 0 || in_size == 0 {
        return Err(AlgebraicError::InvalidArity { n, order: max_a });
    }
    let factorial = |k: usize| -> u128 { (1..=k as u128).product() };
    if n == max_a {
        // Exactly one split: each side is a permutation of its vertices.
        Ok((factorial(out_size) * factorial(in_size)) as u64)
    } else if n + 1 == max_a {
        // One excess position, on either side: a side of size k filled
        // surjectively with k + 1 slots admits (k + 1)!/2 · k tuples.
        let excess_out = factorial(out_size + 1) / 2 * out_size as u128 * factorial(in_size);
        let excess_in = factorial(out_size) * (factorial(in_size + 1) / 2 * in_size as u128);
        Ok((excess_out + excess_in) as u64)
    } else {
        Err(AlgebraicError::OutOfLemmaRange { n, max_a })
    }
}

/// Removes exactly two duplicate-valued interior positions, left to right.
/// Every valid entry tuple with at most order − 2 distinct indices admits
/// such a reduction; failure marks the tuple as unexplainable.
fn reduce_tuple(tuple: &[u32]) -> Result<Vec<u32>, AlgebraicError> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &v in tuple {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut reduced = tuple.to_vec();
    let mut removed = 0usize;
    let mut i = 1usize;
    while removed < 2 && i + 1 < reduced.len() {
        let count = counts.get_mut(&reduced[i]).expect("value was counted");
        if *count > 1 {
            *count -= 1;
            reduced.remove(i);
            removed += 1;
        } else {
            i += 1;
        }
    }
    if removed < 2 {
        return Err(AlgebraicError::MalformedTensor {
            detail: format!("tuple {tuple:?} cannot be reduced to a covering of two sides"),
        });
    }
    Ok(reduced)
}

fn split_sides(tuple: &[u32], s: usize) -> Option<ArcSides> {
    let out: BTreeSet<u32> = tuple[..s].iter().copied().collect();
    let in_: BTreeSet<u32> = tuple[s..].iter().copied().collect();
    if out.intersection(&in_).next().is_some() {
        return None;
    }
    Some((out.into_iter().collect(), in_.into_iter().collect()))
}

/// One undetermined entry tuple: candidate hyperarcs still in play and how
/// many of them the entry value requires.
#[derive(Debug, Clone)]
struct TupleState {
    pending: Vec<ArcSides>,
    numberarcs: i64,
}

enum Propagation {
    Resolved,
    Stalled,
    Contradiction,
}

/// Repeatedly discharges states whose candidates are settled: confirmed
/// candidates reduce the requirement; a requirement of zero closes the
/// state; a requirement equal to the number of survivors confirms them all.
fn propagate(states: &mut Vec<TupleState>, confirmed: &mut BTreeSet<ArcSides>) -> Propagation {
    loop {
        let mut progress = false;
        let mut k = 0usize;
        while k < states.len() {
            let state = &mut states[k];
            let before = state.pending.len();
            state.pending.retain(|arc| !confirmed.contains(arc));
            let settled = before - state.pending.len();
            if settled > 0 {
                state.numberarcs -= settled as i64;
                progress = true;
            }
            if state.numberarcs < 0 || (state.pending.len() as i64) < state.numberarcs {
                return Propagation::Contradiction;
            }
            if state.numberarcs == 0 {
                states.remove(k);
                progress = true;
                continue;
            }
            if state.numberarcs == state.pending.len() as i64 {
                for arc in states.remove(k).pending {
                    confirmed.insert(arc);
                }
                progress = true;
                continue;
            }
            k += 1;
        }
        if states.is_empty() {
            return Propagation::Resolved;
        }
        if !progress {
            return Propagation::Stalled;
        }
    }
}

fn build_and_verify(
    t: &SparseAdjacencyTensor,
    case1: &BTreeSet<ArcSides>,
    confirmed: &BTreeSet<ArcSides>,
) -> Result<OrientedHypergraph, String> {
    let arcs: BTreeSet<ArcSides> = case1.union(confirmed).cloned().collect();
    let h = OrientedHypergraph::build(t.dim(), arcs)
        .map_err(|e| format!("decoded hyperarcs are invalid: {e}"))?;
    match encode_oriented_at_order(&h, t.mode(), t.order()) {
        Ok(encoded) if encoded == *t => Ok(h),
        Ok(_) => Err("re-encoding the decoded hypergraph does not reproduce the entries".into()),
        Err(e) => Err(format!("re-encoding the decoded hypergraph failed: {e}")),
    }
}

fn backtrack(
    states: &mut Vec<TupleState>,
    confirmed: &mut BTreeSet<ArcSides>,
    stack: &mut Vec<(Vec<TupleState>, BTreeSet<ArcSides>, ArcSides)>,
) -> bool {
    match stack.pop() {
        None => false,
        Some((saved_states, saved_confirmed, guess)) => {
            *states = saved_states;
            *confirmed = saved_confirmed;
            // The failed guess is not a hyperarc in any extension of the
            // restored assignment; drop it everywhere.
            for state in states.iter_mut() {
                state.pending.retain(|arc| *arc != guess);
            }
            true
        }
    }
}

/// Recovers the oriented hypergraph encoded by an adjacency tensor.
///
/// Tuples with at most order − 2 distinct indices identify their hyperarc
/// directly: dropping two duplicate interior positions and re-inserting
/// boundary copies at a candidate split yields a probe tuple that exists
/// in the tensor exactly when the split is a hyperarc. Tuples with
/// order − 1 or order distinct indices only bound the number of hyperarcs
/// among their admissible splits; those are settled by constraint
/// propagation, pruned by the per-hyperarc entry counts, and — under
/// `Greedy` — by backtracking search. The result is verified by
/// re-encoding before it is returned.
pub fn decode_tensor_oriented(
    t: &SparseAdjacencyTensor,
    strategy: DecodeStrategy,
) -> Result<OrientedHypergraph, AlgebraicError> {
    if !t.oriented() {
        return Err(AlgebraicError::MalformedTensor {
            detail: "tensor is marked unoriented".into(),
        });
    }
    if t.order() > MAX_DECODE_ORDER {
        return Err(AlgebraicError::OrderTooLarge { order: t.order() });
    }
    let order = t.order();

    let mut case1: BTreeSet<ArcSides> = BTreeSet::new();
    let mut states: Vec<TupleState> = Vec::new();
    for (tuple, value) in t.entries() {
        let n = tuple.iter().copied().collect::<BTreeSet<u32>>().len();
        if n + 2 <= order {
            let reduced = reduce_tuple(tuple)?;
            let last = reduced.len() - 1;
            for s in 1..reduced.len() {
                let Some(sides) = split_sides(&reduced, s) else {
                    continue;
                };
                // Boundary copies pin the split of the probe tuple, so its
                // presence decides this candidate exactly.
                let mut probe = Vec::with_capacity(order);
                probe.extend_from_slice(&reduced[..s]);
                probe.push(reduced[0]);
                probe.push(reduced[last]);
                probe.extend_from_slice(&reduced[s..]);
                if t.value(&probe).is_some() {
                    case1.insert(sides);
                }
            }
        } else {
            if n < 2 {
                return Err(AlgebraicError::MalformedTensor {
                    detail: format!("tuple {tuple:?} repeats a single index"),
                });
            }
            let share = entry_value(n, order, t.mode())?;
            let quotient = value / share;
            if !quotient.is_integer() || quotient <= Rational::zero() {
                return Err(AlgebraicError::MalformedTensor {
                    detail: format!(
                        "entry at {tuple:?} is not a positive multiple of the per-hyperarc share"
                    ),
                });
            }
            let pending: Vec<ArcSides> =
                (1..order).filter_map(|s| split_sides(tuple, s)).collect();
            if pending.is_empty() {
                return Err(AlgebraicError::MalformedTensor {
                    detail: format!("tuple {tuple:?} admits no split into disjoint sides"),
                });
            }
            states.push(TupleState {
                pending,
                numberarcs: quotient.to_integer(),
            });
        }
    }

    // A hyperarc this large owns a known number of entries; candidates seen
    // fewer times than that cannot be present.
    let mut counts: BTreeMap<ArcSides, u64> = BTreeMap::new();
    for state in &states {
        for arc in &state.pending {
            *counts.entry(arc.clone()).or_insert(0) += 1;
        }
    }
    let mut impossible: BTreeSet<ArcSides> = BTreeSet::new();
    for (arc, &count) in &counts {
        if count < index_count(arc.0.len(), arc.1.len(), order)? {
            impossible.insert(arc.clone());
        }
    }
    if !impossible.is_empty() {
        for state in &mut states {
            state.pending.retain(|arc| !impossible.contains(arc));
        }
    }

    let mut confirmed: BTreeSet<ArcSides> = BTreeSet::new();
    let mut stack: Vec<(Vec<TupleState>, BTreeSet<ArcSides>, ArcSides)> = Vec::new();
    loop {
        match propagate(&mut states, &mut confirmed) {
            Propagation::Resolved => match build_and_verify(t, &case1, &confirmed) {
                Ok(h) => return Ok(h),
                Err(detail) => match strategy {
                    DecodeStrategy::Strict => {
                        return Err(AlgebraicError::MalformedTensor { detail })
                    }
                    DecodeStrategy::Greedy => {
                        if !backtrack(&mut states, &mut confirmed, &mut stack) {
                            return Err(AlgebraicError::NoConsistentHypergraph);
                        }
                    }
                },
            },
            Propagation::Stalled => match strategy {
                DecodeStrategy::Strict => {
                    let candidates: BTreeSet<ArcSides> = states
                        .iter()
                        .flat_map(|state| state.pending.iter().cloned())
                        .collect();
                    return Err(AlgebraicError::AmbiguousTensor {
                        candidates: candidates.into_iter().collect(),
                    });
                }
                DecodeStrategy::Greedy => {
                    // First undetermined entry, smallest split: deterministic.
                    let guess = states[0].pending[0].clone();
                    stack.push((states.clone(), confirmed.clone(), guess.clone()));
                    confirmed.insert(guess);
                }
            },
            Propagation::Contradiction => match strategy {
                DecodeStrategy::Strict => {
                    return Err(AlgebraicError::MalformedTensor {
                        detail: "no assignment of hyperarcs is consistent with the entries".into(),
                    })
                }
                DecodeStrategy::Greedy => {
                    if !backtrack(&mut states, &mut confirmed, &mut stack) {
                        return Err(AlgebraicError::NoConsistentHypergraph);
                    }
                }
            },
        }
    }
}

/// Recovers the unoriented hypergraph encoded by an adjacency tensor: the
/// distinct indices of each nonzero tuple are a hyperedge, and the result
/// must re-encode to the input exactly.
pub fn decode_tensor_unoriented(
    t: &SparseAdjacencyTensor,
) -> Result<UnorientedHypergraph, AlgebraicError> {
    if t.oriented() {
        return Err(AlgebraicError::Inconsistent);
    }
    if t.order() > MAX_DECODE_ORDER {
        return Err(AlgebraicError::OrderTooLarge { order: t.order() });
    }
    let mut edges: BTreeSet<Vec<u32>> = BTreeSet::new();
    for (tuple, _) in t.entries() {
        let members: BTreeSet<u32> = tuple.iter().copied().collect();
        if members.len() < 2 {
            return Err(AlgebraicError::Inconsistent);
        }
        edges.insert(members.into_iter().collect());
    }
    let h = UnorientedHypergraph::build(t.dim(), edges)
        .map_err(|_| AlgebraicError::Inconsistent)?;
    match encode_unoriented_at_order(&h, t.mode(), t.order()) {
        Ok(encoded) if encoded == *t => Ok(h),
        _ => Err(AlgebraicError::Inconsistent),
    }
}

/// True when `h` re-encodes exactly to `t` at `t`'s order and mode.
pub fn verify_decode_oriented(t: &SparseAdjacencyTensor, h: &OrientedHypergraph) -> bool {
    t.oriented()
        && encode_oriented_at_order(h, t.mode(), t.order())
            .map_or(false, |encoded| encoded == *t)
}

/// True when `h` re-encodes exactly to `t` at `t`'s order and mode.
pub fn verify_decode_unoriented(t: &SparseAdjacencyTensor, h: &UnorientedHypergraph) -> bool {
    !t.oriented()
        && encode_unoriented_at_order(h, t.mode(), t.order())
            .map_or(false, |encoded| encoded == *t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{encode_tensor_oriented, encode_tensor_unoriented, EntryMode};

    fn arc_list(h: &OrientedHypergraph) -> Vec<ArcSides> {
        h.hyperarcs()
            .iter()
            .map(|a| {
                (
                    a.out_set().iter().map(|v| v.get()).collect(),
                    a.in_set().iter().map(|v| v.get()).collect(),
                )
            })
            .collect()
    }

    fn edge_list(h: &UnorientedHypergraph) -> Vec<Vec<u32>> {
        h.hyperedges()
            .iter()
            .map(|e| e.members().iter().map(|v| v.get()).collect())
            .collect()
    }

    fn paper_oriented() -> OrientedHypergraph {
        OrientedHypergraph::build(
            6,
            [
                (vec![1, 2], vec![4]),
                (vec![3], vec![2, 6]),
                (vec![5], vec![6]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn index_counts_match_the_closed_forms() {
        assert_eq!(index_count(2, 1, 3), Ok(2));
        assert_eq!(index_count(1, 1, 3), Ok(2));
        assert_eq!(index_count(1, 2, 3), Ok(2));
        assert_eq!(index_count(2, 2, 4), Ok(4));
        assert_eq!(index_count(2, 1, 4), Ok(8));
        assert_eq!(
            index_count(1, 1, 4),
            Err(AlgebraicError::OutOfLemmaRange { n: 2, max_a: 4 })
        );
        assert_eq!(
            index_count(2, 2, 3),
            Err(AlgebraicError::OutOfLemmaRange { n: 4, max_a: 3 })
        );
    }

    #[test]
    fn index_counts_equal_exhaustive_entry_counts() {
        // Encode one hyperarc at order max_a and count its entries; the
        // closed forms must match for every admissible side split.
        for max_a in 2..=5usize {
            for out_size in 1..max_a {
                for in_size in 1..=max_a - out_size {
                    let n = out_size + in_size;
                    if n + 1 < max_a {
                        continue;
                    }
                    let out: Vec<u32> = (1..=out_size as u32).collect();
                    let in_: Vec<u32> =
                        (out_size as u32 + 1..=n as u32).collect();
                    let h = OrientedHypergraph::build(n as u32, [(out, in_)]).unwrap();
                    let t =
                        encode_oriented_at_order(&h, EntryMode::Simplified, max_a).unwrap();
                    assert_eq!(
                        index_count(out_size, in_size, max_a).unwrap(),
                        t.len() as u64,
                        "sides ({out_size},{in_size}) at order {max_a}"
                    );
                }
            }
        }
    }

    #[test]
    fn standard_tensors_decode_back_strictly() {
        let h = paper_oriented();
        for mode in [EntryMode::Simplified, EntryMode::Full] {
            let t = encode_tensor_oriented(&h, mode, false).unwrap();
            let decoded = decode_tensor_oriented(&t, DecodeStrategy::Strict).unwrap();
            assert_eq!(arc_list(&decoded), arc_list(&h));
            assert!(verify_decode_oriented(&t, &decoded));
        }
    }

    #[test]
    fn increased_tensors_decode_without_search() {
        let h = paper_oriented();
        let t = encode_tensor_oriented(&h, EntryMode::Simplified, true).unwrap();
        let decoded = decode_tensor_oriented(&t, DecodeStrategy::Strict).unwrap();
        assert_eq!(arc_list(&decoded), arc_list(&h));
    }

    #[test]
    fn colliding_hypergraphs_share_a_tensor_and_stall_strict_decoding() {
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

        match decode_tensor_oriented(&t1, DecodeStrategy::Strict) {
            Err(AlgebraicError::AmbiguousTensor { candidates }) => {
                assert!(candidates.contains(&(vec![1], vec![2, 3, 4])));
                assert!(candidates.contains(&(vec![1, 2], vec![3, 4])));
            }
            other => panic!("expected ambiguity, got {other:?}"),
        }

        let greedy = decode_tensor_oriented(&t1, DecodeStrategy::Greedy).unwrap();
        assert!(verify_decode_oriented(&t1, &greedy));
        assert_eq!(arc_list(&greedy), arc_list(&singletons));
        // Both sources re-encode to the same tensor.
        assert!(verify_decode_oriented(&t1, &pairs));
        assert!(verify_decode_oriented(&t1, &singletons));
    }

    #[test]
    fn verification_rejects_a_different_hypergraph() {
        let h = paper_oriented();
        let t = encode_tensor_oriented(&h, EntryMode::Simplified, false).unwrap();
        let switched = h.switched();
        assert!(!verify_decode_oriented(&t, &switched));
    }

    #[test]
    fn unoriented_tensors_decode_back() {
        let h =
            UnorientedHypergraph::build(6, [vec![1, 2, 4], vec![2, 3, 6], vec![5, 6]]).unwrap();
        let t = encode_tensor_unoriented(&h, EntryMode::Simplified).unwrap();
        let decoded = decode_tensor_unoriented(&t).unwrap();
        assert_eq!(edge_list(&decoded), edge_list(&h));
        assert!(verify_decode_unoriented(&t, &decoded));
    }

    #[test]
    fn a_single_pair_slice_decodes_at_higher_order() {
        // An order-3 tensor holding only the surjective tuples over {5,6}
        // decodes to the single hyperedge even though its cardinality is 2.
        let mut entries = BTreeMap::new();
        for tuple in [
            [5u32, 5, 6],
            [5, 6, 5],
            [6, 5, 5],
            [5, 6, 6],
            [6, 5, 6],
            [6, 6, 5],
        ] {
            entries.insert(tuple.to_vec(), Rational::new(1, 1));
        }
        let t =
            SparseAdjacencyTensor::new(false, 3, 6, EntryMode::Simplified, entries).unwrap();
        let decoded = decode_tensor_unoriented(&t).unwrap();
        assert_eq!(edge_list(&decoded), vec![vec![5, 6]]);
    }

    #[test]
    fn empty_tensors_decode_to_empty_hypergraphs() {
        let t = SparseAdjacencyTensor::new(true, 3, 4, EntryMode::Simplified, BTreeMap::new())
            .unwrap();
        let decoded = decode_tensor_oriented(&t, DecodeStrategy::Strict).unwrap();
        assert_eq!(decoded.hyperarc_count(), 0);
        assert_eq!(decoded.vertex_count(), 4);

        let t = SparseAdjacencyTensor::new(false, 3, 4, EntryMode::Simplified, BTreeMap::new())
            .unwrap();
        let decoded = decode_tensor_unoriented(&t).unwrap();
        assert_eq!(decoded.hyperedge_count(), 0);
    }

    #[test]
    fn incomplete_unoriented_tensors_are_inconsistent() {
        let mut entries = BTreeMap::new();
        entries.insert(vec![5, 5, 6], Rational::new(1, 1));
        let t =
            SparseAdjacencyTensor::new(false, 3, 6, EntryMode::Simplified, entries).unwrap();
        assert_eq!(decode_tensor_unoriented(&t), Err(AlgebraicError::Inconsistent));

        let mut entries = BTreeMap::new();
        entries.insert(vec![5, 5, 5], Rational::new(1, 1));
        let t =
            SparseAdjacencyTensor::new(false, 3, 6, EntryMode::Simplified, entries).unwrap();
        assert_eq!(decode_tensor_unoriented(&t), Err(AlgebraicError::Inconsistent));
    }

    #[test]
    fn non_integral_multiplicities_are_malformed() {
        let mut entries = BTreeMap::new();
        entries.insert(vec![1, 2], Rational::new(1, 7));
        let t =
            SparseAdjacencyTensor::new(true, 2, 2, EntryMode::Simplified, entries).unwrap();
        assert!(matches!(
            decode_tensor_oriented(&t, DecodeStrategy::Strict),
            Err(AlgebraicError::MalformedTensor { .. })
        ));
    }

    #[test]
    fn incomplete_oriented_tensors_fail_verification() {
        // One tuple of the hyperarc ({1},{2}) at order 4 without its
        // siblings: decoding finds the hyperarc, re-encoding refutes it.
        let mut entries = BTreeMap::new();
        entries.insert(vec![1, 1, 2, 2], Rational::new(1, 1));
        let t =
            SparseAdjacencyTensor::new(true, 4, 2, EntryMode::Simplified, entries).unwrap();
        assert!(matches!(
            decode_tensor_oriented(&t, DecodeStrategy::Strict),
            Err(AlgebraicError::MalformedTensor { .. })
        ));
        assert_eq!(
            decode_tensor_oriented(&t, DecodeStrategy::Greedy),
            Err(AlgebraicError::NoConsistentHypergraph)
        );
    }

    #[test]
    fn excessive_orders_are_refused() {
        let mut entries = BTreeMap::new();
        entries.insert(vec![1; 9], Rational::new(1, 1));
        let t =
            SparseAdjacencyTensor::new(true, 9, 2, EntryMode::Simplified, entries).unwrap();
        assert_eq!(
            decode_tensor_oriented(&t, DecodeStrategy::Strict),
            Err(AlgebraicError::OrderTooLarge { order: 9 })
        );
    }
}
