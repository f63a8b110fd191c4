use std::collections::BTreeMap;

use hypercalc_core::{OrientedHypergraph, UnorientedHypergraph, VertexId};
use num_traits::Zero;

use crate::error::AlgebraicError;

/// Exact tensor entry: reduced fraction with positive denominator.
pub type Rational = num_rational::Ratio<i64>;

/// How tensor entries are valued. `Full` divides each hyperarc's vertex
/// count by its surjective tuple count; `Simplified` stores n/2 per
/// represented hyperarc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntryMode {
    Full,
    #[default]
    Simplified,
}

/// Enumeration guard: encodings whose tuple estimate exceeds this are
/// refused.
const MAX_TUPLES: u128 = 10_000_000;

/// Sparse adjacency tensor keyed by 1-based index tuples in lexicographic
/// order. Absent tuples are zero; stored values are positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseAdjacencyTensor {
    oriented: bool,
    order: usize,
    dim: u32,
    mode: EntryMode,
    entries: BTreeMap<Vec<u32>, Rational>,
}

impl SparseAdjacencyTensor {
    /// Validates tuple lengths, index ranges, and entry positivity.
    pub fn new(
        oriented: bool,
        order: usize,
        dim: u32,
        mode: EntryMode,
        entries: BTreeMap<Vec<u32>, Rational>,
    ) -> Result<Self, AlgebraicError> {
        if order < 2 {
            return Err(AlgebraicError::MalformedTensor {
                detail: format!("order {order} is below 2"),
            });
        }
        if dim == 0 {
            return Err(AlgebraicError::MalformedTensor {
                detail: "dimension 0".into(),
            });
        }
        for (tuple, value) in &entries {
            if tuple.len() != order {
                return Err(AlgebraicError::MalformedTensor {
                    detail: format!("tuple {tuple:?} does not have order {order}"),
                });
            }
            if tuple.iter().any(|&i| i == 0 || i > dim) {
                return Err(AlgebraicError::MalformedTensor {
                    detail: format!("tuple {tuple:?} leaves the index range 1..={dim}"),
                });
            }
            if *value <= Rational::zero() {
                return Err(AlgebraicError::MalformedTensor {
                    detail: format!("entry at {tuple:?} is not positive"),
                });
            }
        }
        Ok(Self {
            oriented,
            order,
            dim,
            mode,
            entries,
        })
    }

    pub fn oriented(&self) -> bool {
        self.oriented
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn mode(&self) -> EntryMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value(&self, tuple: &[u32]) -> Option<Rational> {
        self.entries.get(tuple).copied()
    }

    /// Entries in lexicographic tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (&[u32], Rational)> + '_ {
        self.entries.iter().map(|(t, &v)| (t.as_slice(), v))
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of surjective tuples of the given length onto n labeled values,
/// via the composition sum Σ length!/(l_1!…l_n!) over l_1+…+l_n = length
/// with every l_k ≥ 1.
fn surjection_count(n: usize, length: usize) -> u128 {
    fn go(parts_left: usize, remaining: usize, length_factorial: u128, divisor: u128) -> u128 {
        if parts_left == 1 {
            return length_factorial / (divisor * factorial(remaining));
        }
        // Leave at least one slot for each later part.
        (1..=remaining - (parts_left - 1))
            .map(|l| go(parts_left - 1, remaining - l, length_factorial, divisor * factorial(l)))
            .sum()
    }
    if n == 0 || n > length {
        return 0;
    }
    go(n, length, factorial(length), 1)
}

/// Value contributed by one hyperedge/hyperarc with n distinct vertices to
/// each of its tuples in a tensor of the given order.
pub fn entry_value(n: usize, order: usize, mode: EntryMode) -> Result<Rational, AlgebraicError> {
    if n < 2 || n > order {
        return Err(AlgebraicError::InvalidArity { n, order });
    }
    match mode {
        EntryMode::Simplified => Ok(Rational::new(n as i64, 2)),
        EntryMode::Full => {
            let denominator = i64::try_from(surjection_count(n, order))
                .expect("surjection count fits the entry denominator");
            Ok(Rational::new(n as i64, denominator))
        }
    }
}

/// Calls `f` for every tuple of `length` values drawn from `values` that
/// uses each value at least once. `values` must be distinct.
fn for_each_surjective(values: &[u32], length: usize, f: &mut impl FnMut(&[u32])) {
    fn go(
        values: &[u32],
        length: usize,
        tuple: &mut Vec<u32>,
        used: &mut [bool],
        missing: usize,
        f: &mut impl FnMut(&[u32]),
    ) {
        // Prune branches that can no longer cover every value.
        if missing > length - tuple.len() {
            return;
        }
        if tuple.len() == length {
            f(tuple);
            return;
        }
        for (k, &v) in values.iter().enumerate() {
            let first_use = !used[k];
            used[k] = true;
            tuple.push(v);
            go(
                values,
                length,
                tuple,
                used,
                if first_use { missing - 1 } else { missing },
                f,
            );
            tuple.pop();
            if first_use {
                used[k] = false;
            }
        }
    }
    if values.len() > length {
        return;
    }
    let mut used = vec![false; values.len()];
    go(values, length, &mut Vec::with_capacity(length), &mut used, values.len(), f);
}

fn side_ids(set: &hypercalc_core::VertexSet) -> Vec<u32> {
    set.iter().map(VertexId::get).collect()
}

/// Shared oriented encoder with a caller-chosen order (the public entry
/// points pass max_a or max_a + 2; verification passes the tensor's own
/// order). Hyperarcs too large for the order contribute nothing.
pub(crate) fn encode_oriented_at_order(
    h: &OrientedHypergraph,
    mode: EntryMode,
    order: usize,
) -> Result<SparseAdjacencyTensor, AlgebraicError> {
    let mut estimated: u128 = 0;
    for arc in h.hyperarcs() {
        let r = arc.out_set().len();
        let t = arc.in_set().len();
        if r + t > order {
            continue;
        }
        for s in r..=order - t {
            estimated = estimated
                .saturating_add((r as u128).pow(s as u32) * (t as u128).pow((order - s) as u32));
        }
    }
    if estimated > MAX_TUPLES {
        return Err(AlgebraicError::TooLarge {
            estimated: u64::try_from(estimated).unwrap_or(u64::MAX),
        });
    }

    let mut entries: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for arc in h.hyperarcs() {
        let out = side_ids(arc.out_set());
        let in_ = side_ids(arc.in_set());
        let n = out.len() + in_.len();
        if n > order {
            continue;
        }
        let share = entry_value(n, order, mode)?;
        for s in out.len()..=order - in_.len() {
            for_each_surjective(&out, s, &mut |prefix| {
                let mut suffix_cb = |suffix: &[u32]| {
                    let mut tuple = Vec::with_capacity(order);
                    tuple.extend_from_slice(prefix);
                    tuple.extend_from_slice(suffix);
                    *entries.entry(tuple).or_insert_with(Rational::zero) += share;
                };
                for_each_surjective(&in_, order - s, &mut suffix_cb);
            });
        }
    }
    SparseAdjacencyTensor::new(true, order, h.vertex_count(), mode, entries)
}

pub(crate) fn encode_unoriented_at_order(
    h: &UnorientedHypergraph,
    mode: EntryMode,
    order: usize,
) -> Result<SparseAdjacencyTensor, AlgebraicError> {
    let mut estimated: u128 = 0;
    for edge in h.hyperedges() {
        let n = edge.cardinality();
        if n > order {
            continue;
        }
        estimated = estimated.saturating_add((n as u128).pow(order as u32));
    }
    if estimated > MAX_TUPLES {
        return Err(AlgebraicError::TooLarge {
            estimated: u64::try_from(estimated).unwrap_or(u64::MAX),
        });
    }

    let mut entries: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for edge in h.hyperedges() {
        let members = side_ids(edge.members());
        let n = members.len();
        if n > order {
            continue;
        }
        let share = entry_value(n, order, mode)?;
        for_each_surjective(&members, order, &mut |tuple| {
            *entries.entry(tuple.to_vec()).or_insert_with(Rational::zero) += share;
        });
    }
    SparseAdjacencyTensor::new(false, order, h.vertex_count(), mode, entries)
}

/// Adjacency tensor of an unoriented hypergraph: order max_e; every tuple
/// covering exactly a hyperedge's members carries that hyperedge's share.
pub fn encode_tensor_unoriented(
    h: &UnorientedHypergraph,
    mode: EntryMode,
) -> Result<SparseAdjacencyTensor, AlgebraicError> {
    let (_, max_e) = h
        .cardinality_bounds()
        .map_err(|_| AlgebraicError::EmptyHypergraph)?;
    encode_unoriented_at_order(h, mode, max_e)
}

/// Adjacency tensor of an oriented hypergraph: order max_a (or max_a + 2
/// when `increased`); every tuple splitting into a surjective prefix over
/// a_q's output side and a surjective suffix over its input side carries
/// a_q's share, with shares summed across hyperarcs.
pub fn encode_tensor_oriented(
    h: &OrientedHypergraph,
    mode: EntryMode,
    increased: bool,
) -> Result<SparseAdjacencyTensor, AlgebraicError> {
    let (_, max_a) = h
        .cardinality_bounds()
        .map_err(|_| AlgebraicError::EmptyHypergraph)?;
    let order = if increased { max_a + 2 } else { max_a };
    encode_oriented_at_order(h, mode, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
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

    fn paper_unoriented() -> UnorientedHypergraph {
        UnorientedHypergraph::build(6, [vec![1, 2, 4], vec![2, 3, 6], vec![5, 6]]).unwrap()
    }

    #[test]
    fn entry_values_match_the_printed_fractions() {
        assert_eq!(entry_value(2, 2, EntryMode::Full).unwrap(), ratio(1, 1));
        assert_eq!(
            entry_value(3, 3, EntryMode::Simplified).unwrap(),
            ratio(3, 2)
        );
        assert_eq!(entry_value(2, 3, EntryMode::Full).unwrap(), ratio(1, 3));
        assert_eq!(
            entry_value(1, 3, EntryMode::Full),
            Err(AlgebraicError::InvalidArity { n: 1, order: 3 })
        );
        assert_eq!(
            entry_value(4, 3, EntryMode::Simplified),
            Err(AlgebraicError::InvalidArity { n: 4, order: 3 })
        );
    }

    #[test]
    fn surjection_counts_match_inclusion_exclusion() {
        // Σ_j (−1)^j C(n,j)(n−j)^length, the standard inclusion–exclusion
        // count, cross-checks the composition enumeration.
        fn binomial(n: usize, k: usize) -> i128 {
            let mut value: i128 = 1;
            for i in 0..k {
                value = value * (n - i) as i128 / (i + 1) as i128;
            }
            value
        }
        for n in 1..=6usize {
            for length in n..=8usize {
                let by_sieve: i128 = (0..=n)
                    .map(|j| {
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        sign * binomial(n, j) * ((n - j) as i128).pow(length as u32)
                    })
                    .sum();
                assert_eq!(surjection_count(n, length) as i128, by_sieve, "n={n} length={length}");
            }
        }
    }

    #[test]
    fn oriented_encoding_reproduces_the_printed_tuples() {
        let t = encode_tensor_oriented(&paper_oriented(), EntryMode::Simplified, false).unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.dim(), 6);
        let expected: Vec<(Vec<u32>, Rational)> = vec![
            (vec![1, 2, 4], ratio(3, 2)),
            (vec![2, 1, 4], ratio(3, 2)),
            (vec![3, 2, 6], ratio(3, 2)),
            (vec![3, 6, 2], ratio(3, 2)),
            (vec![5, 5, 6], ratio(1, 1)),
            (vec![5, 6, 6], ratio(1, 1)),
        ];
        let actual: Vec<(Vec<u32>, Rational)> =
            t.entries().map(|(tuple, v)| (tuple.to_vec(), v)).collect();
        assert_eq!(actual, expected);
    }

    #[test]
    fn full_mode_divides_by_the_surjection_count() {
        let t = encode_tensor_oriented(&paper_oriented(), EntryMode::Full, false).unwrap();
        // n = 3 at order 3: 3 / 3! = 1/2; n = 2 at order 3: 2 / 6 = 1/3.
        assert_eq!(t.value(&[1, 2, 4]), Some(ratio(1, 2)));
        assert_eq!(t.value(&[5, 5, 6]), Some(ratio(1, 3)));
        assert_eq!(t.len(), 6);
    }

    #[test]
    fn unoriented_encoding_reproduces_the_printed_tuples() {
        let t = encode_tensor_unoriented(&paper_unoriented(), EntryMode::Simplified).unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.len(), 18);
        // e_1 = {1,2,4}: all six permutations at 3/2.
        for tuple in [
            [1u32, 2, 4],
            [1, 4, 2],
            [2, 1, 4],
            [4, 1, 2],
            [2, 4, 1],
            [4, 2, 1],
        ] {
            assert_eq!(t.value(&tuple), Some(ratio(3, 2)), "{tuple:?}");
        }
        // e_3 = {5,6}: the six surjective tuples at 1.
        for tuple in [
            [5u32, 5, 6],
            [5, 6, 5],
            [6, 5, 5],
            [5, 6, 6],
            [6, 5, 6],
            [6, 6, 5],
        ] {
            assert_eq!(t.value(&tuple), Some(ratio(1, 1)), "{tuple:?}");
        }
        assert_eq!(t.value(&[1, 2, 3]), None);
    }

    #[test]
    fn increased_order_encoding_reproduces_the_printed_tuples() {
        let t = encode_tensor_oriented(&paper_oriented(), EntryMode::Simplified, true).unwrap();
        assert_eq!(t.order(), 5);
        // a_3 = ({5},{6}) is encoded by exactly four tuples.
        for tuple in [
            [5u32, 5, 5, 5, 6],
            [5, 5, 5, 6, 6],
            [5, 5, 6, 6, 6],
            [5, 6, 6, 6, 6],
        ] {
            assert_eq!(t.value(&tuple), Some(ratio(1, 1)), "{tuple:?}");
        }
        // Two of a_1's printed tuples, still at share 3/2.
        assert_eq!(t.value(&[1, 1, 1, 2, 4]), Some(ratio(3, 2)));
        assert_eq!(t.value(&[1, 2, 4, 4, 4]), Some(ratio(3, 2)));
        // 22 tuples for a_1, 22 for a_2, 4 for a_3.
        assert_eq!(t.len(), 48);
    }

    #[test]
    fn graph_tensor_is_the_adjacency_matrix() {
        let g = hypercalc_core::OrientedNormalGraph::build(
            6,
            [(2, 5), (3, 6), (4, 2), (4, 5), (6, 3)],
        )
        .unwrap();
        let t = encode_tensor_oriented(&g.as_hypergraph(), EntryMode::Full, false).unwrap();
        let a = crate::matrix::adjacency_matrix_oriented(&g);
        assert_eq!(t.order(), 2);
        for i in 1..=6u32 {
            for j in 1..=6u32 {
                let entry = a.entry(VertexId::new(i), VertexId::new(j));
                let expected = (entry == 1).then(|| ratio(1, 1));
                assert_eq!(t.value(&[i, j]), expected, "({i},{j})");
            }
        }
    }

    #[test]
    fn empty_hypergraphs_are_rejected() {
        let h = OrientedHypergraph::build(3, Vec::<(Vec<u32>, Vec<u32>)>::new()).unwrap();
        assert_eq!(
            encode_tensor_oriented(&h, EntryMode::Simplified, false),
            Err(AlgebraicError::EmptyHypergraph)
        );
    }

    #[test]
    fn oversized_enumerations_are_refused() {
        let h = OrientedHypergraph::build(
            26,
            [(
                (1..=13).collect::<Vec<u32>>(),
                (14..=26).collect::<Vec<u32>>(),
            )],
        )
        .unwrap();
        assert!(matches!(
            encode_tensor_oriented(&h, EntryMode::Simplified, false),
            Err(AlgebraicError::TooLarge { .. })
        ));
    }

    #[test]
    fn tensor_construction_validates_entries() {
        let mut entries = BTreeMap::new();
        entries.insert(vec![1, 2], ratio(-1, 2));
        assert!(matches!(
            SparseAdjacencyTensor::new(true, 2, 3, EntryMode::Simplified, entries),
            Err(AlgebraicError::MalformedTensor { .. })
        ));
        let mut entries = BTreeMap::new();
        entries.insert(vec![1, 2, 3], ratio(1, 1));
        assert!(matches!(
            SparseAdjacencyTensor::new(true, 2, 3, EntryMode::Simplified, entries),
            Err(AlgebraicError::MalformedTensor { .. })
        ));
        let mut entries = BTreeMap::new();
        entries.insert(vec![1, 4], ratio(1, 1));
        assert!(matches!(
            SparseAdjacencyTensor::new(true, 2, 3, EntryMode::Simplified, entries),
            Err(AlgebraicError::MalformedTensor { .. })
        ));
    }
}
