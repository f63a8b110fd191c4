use std::fmt;

use crate::error::CoreError;

/// 1-based vertex index, matching the external convention `v_1..v_N`.
///
/// Whether an id is in range for a particular structure (`1..=N`) is checked
/// when the structure is built; the id itself only guarantees nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    /// Panics if `index == 0`; use [`VertexId::try_new`] for untrusted input.
    pub fn new(index: u32) -> Self {
        Self::try_new(index).expect("vertex ids are 1-based")
    }

    pub fn try_new(index: u32) -> Result<Self, CoreError> {
        if index == 0 {
            Err(CoreError::IndexOutOfRange { index: 0, max: 0 })
        } else {
            Ok(VertexId(index))
        }
    }

    /// The 1-based index.
    pub fn get(self) -> u32 {
        self.0
    }

    /// 0-based position for indexing vectors of length `N`.
    pub fn to_index(self) -> usize {
        (self.0 - 1) as usize
    }

    /// Inverse of [`VertexId::to_index`].
    pub fn from_index(index: usize) -> Self {
        VertexId(index as u32 + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of vertices stored sorted ascending without duplicates.
///
/// Repeated ids in the input collapse silently (set semantics). Equality and
/// ordering are element-wise on the sorted sequence, so two `VertexSet`s are
/// equal exactly when they contain the same vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new(ids: impl IntoIterator<Item = VertexId>) -> Self {
        let mut v: Vec<VertexId> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Convenience constructor from raw 1-based indices; panics on 0.
    pub fn from_indices(ids: impl IntoIterator<Item = u32>) -> Self {
        Self::new(ids.into_iter().map(VertexId::new))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    /// Largest id, `None` when empty.
    pub fn max_id(&self) -> Option<VertexId> {
        self.0.last().copied()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        // Both sides are sorted; a single merge pass suffices.
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        Self::new(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}
