use num_bigint::BigUint;

use crate::error::CoreError;

/// Which feasible-structure family to count over `N` labeled vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeasibleKind {
    /// Vertex subsets of cardinality at least 2: `2^N − (N + 1)`.
    Hyperedges,
    /// Ordered pairs of disjoint nonempty vertex subsets:
    /// `Σ_{n=2..N} C(N,n)·(2^n − 2) = 3^N − 2^{N+1} + 1`.
    Hyperarcs,
}

/// Exact number of distinct hyperedges or hyperarcs on `n` labeled vertices.
/// Arbitrary precision, so it never overflows; both counts are bounded by
/// `n^n`. Requires `n >= 2` (below that nothing with cardinality ≥ 2 fits).
pub fn count_feasible(kind: FeasibleKind, n: u32) -> Result<BigUint, CoreError> {
    if n < 2 {
        return Err(CoreError::CountTooSmall { n });
    }
    let count = match kind {
        FeasibleKind::Hyperedges => {
            // Subsets minus the empty set and the n singletons.
            pow(2u32, n) - (n + 1u32)
        }
        FeasibleKind::Hyperarcs => {
            // Each vertex goes to out, in, or neither (3^n assignments);
            // remove the 2·2^n with an empty side, re-add the doubly empty.
            pow(3u32, n) - pow(2u32, n + 1) + 1u32
        }
    };
    Ok(count)
}

/// Like [`count_feasible`], but returns `None` when the count exceeds
/// `u64::MAX` (useful for feasibility checks on machine-sized requests).
pub fn count_feasible_capped(kind: FeasibleKind, n: u32) -> Result<Option<u64>, CoreError> {
    Ok(u64::try_from(&count_feasible(kind, n)?).ok())
}

fn pow(base: u32, exp: u32) -> BigUint {
    BigUint::from(base).pow(exp)
}
