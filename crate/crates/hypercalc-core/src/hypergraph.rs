use std::collections::HashSet;

use crate::error::CoreError;
use crate::ids::{VertexId, VertexSet};

/// A hyperarc: disjoint nonempty output and input vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperarc {
    out: VertexSet,
    in_: VertexSet,
}

impl Hyperarc {
    pub fn new(out: VertexSet, in_: VertexSet) -> Result<Self, CoreError> {
        if out.is_empty() || in_.is_empty() {
            return Err(CoreError::EmptySide);
        }
        if !out.is_disjoint(&in_) {
            return Err(CoreError::Overlap);
        }
        Ok(Hyperarc { out, in_ })
    }

    /// Convenience constructor from raw 1-based indices.
    pub fn from_indices(
        out: impl IntoIterator<Item = u32>,
        in_: impl IntoIterator<Item = u32>,
    ) -> Result<Self, CoreError> {
        let collect = |ids: &mut dyn Iterator<Item = u32>| -> Result<VertexSet, CoreError> {
            ids.map(VertexId::try_new).collect()
        };
        Self::new(
            collect(&mut out.into_iter())?,
            collect(&mut in_.into_iter())?,
        )
    }

    pub fn out_set(&self) -> &VertexSet {
        &self.out
    }

    pub fn in_set(&self) -> &VertexSet {
        &self.in_
    }

    /// Output and input side swapped.
    pub fn switched(&self) -> Hyperarc {
        Hyperarc {
            out: self.in_.clone(),
            in_: self.out.clone(),
        }
    }

    /// `|out| + |in|`; the sides are disjoint, so this counts distinct vertices.
    pub fn cardinality(&self) -> usize {
        self.out.len() + self.in_.len()
    }

    /// All member vertices, output side first (each side sorted).
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.out.iter().chain(self.in_.iter())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.out.contains(v) || self.in_.contains(v)
    }
}

/// A hyperedge: an unordered set of at least 2 vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperedge {
    members: VertexSet,
}

impl Hyperedge {
    pub fn new(members: VertexSet) -> Result<Self, CoreError> {
        if members.len() < 2 {
            return Err(CoreError::TooSmall {
                size: members.len(),
            });
        }
        Ok(Hyperedge { members })
    }

    /// Convenience constructor from raw 1-based indices.
    pub fn from_indices(members: impl IntoIterator<Item = u32>) -> Result<Self, CoreError> {
        Self::new(
            members
                .into_iter()
                .map(VertexId::try_new)
                .collect::<Result<_, _>>()?,
        )
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(v)
    }
}

/// An oriented hypergraph: `N` vertices plus an ordered sequence of pairwise
/// distinct hyperarcs. The position of a hyperarc in the sequence is its
/// index `q` (0-based in this API, 1-based in serialized form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedHypergraph {
    vertex_count: u32,
    hyperarcs: Vec<Hyperarc>,
    // Degree tables, 0-indexed by vertex. A vertex lies on at most one side
    // of each hyperarc, so deg = deg_out + deg_in counts incident hyperarcs.
    deg_out: Vec<u32>,
    deg_in: Vec<u32>,
}

impl OrientedHypergraph {
    pub fn new(vertex_count: u32, hyperarcs: Vec<Hyperarc>) -> Result<Self, CoreError> {
        if vertex_count == 0 {
            return Err(CoreError::NoVertices);
        }
        let mut deg_out = vec![0u32; vertex_count as usize];
        let mut deg_in = vec![0u32; vertex_count as usize];
        let mut seen: HashSet<(&VertexSet, &VertexSet)> = HashSet::new();
        for (pos, arc) in hyperarcs.iter().enumerate() {
            if let Some(v) = arc.vertices().find(|v| v.get() > vertex_count) {
                return Err(CoreError::IndexOutOfRange {
                    index: v.get(),
                    max: vertex_count,
                });
            }
            if !seen.insert((&arc.out, &arc.in_)) {
                return Err(CoreError::Duplicate { position: pos + 1 });
            }
            for v in arc.out.iter() {
                deg_out[v.to_index()] += 1;
            }
            for v in arc.in_.iter() {
                deg_in[v.to_index()] += 1;
            }
        }
        Ok(OrientedHypergraph {
            vertex_count,
            hyperarcs,
            deg_out,
            deg_in,
        })
    }

    /// Builds from raw 1-based index sets, validating everything.
    pub fn build(
        vertex_count: u32,
        arcs: impl IntoIterator<Item = (Vec<u32>, Vec<u32>)>,
    ) -> Result<Self, CoreError> {
        let hyperarcs = arcs
            .into_iter()
            .map(|(out, in_)| Hyperarc::from_indices(out, in_))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertex_count, hyperarcs)
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.vertex_count).map(VertexId::new)
    }

    /// Number of hyperarcs `M`.
    pub fn hyperarc_count(&self) -> usize {
        self.hyperarcs.len()
    }

    pub fn hyperarcs(&self) -> &[Hyperarc] {
        &self.hyperarcs
    }

    pub fn hyperarc(&self, q: usize) -> &Hyperarc {
        &self.hyperarcs[q]
    }

    /// The same hypergraph with every hyperarc's sides swapped, preserving
    /// positions. Involution: switching twice returns the original.
    pub fn switched(&self) -> OrientedHypergraph {
        OrientedHypergraph {
            vertex_count: self.vertex_count,
            hyperarcs: self.hyperarcs.iter().map(Hyperarc::switched).collect(),
            deg_out: self.deg_in.clone(),
            deg_in: self.deg_out.clone(),
        }
    }

    /// Number of hyperarcs whose output side contains `v`.
    pub fn degree_out(&self, v: VertexId) -> u32 {
        self.deg_out[v.to_index()]
    }

    /// Number of hyperarcs whose input side contains `v`.
    pub fn degree_in(&self, v: VertexId) -> u32 {
        self.deg_in[v.to_index()]
    }

    /// Total degree: the number of hyperarcs containing `v` on either side.
    pub fn degree(&self, v: VertexId) -> u32 {
        self.deg_out[v.to_index()] + self.deg_in[v.to_index()]
    }

    /// Indicator δ_out: is `v` an output vertex of hyperarc `q` (0-based)?
    pub fn delta_out(&self, v: VertexId, q: usize) -> bool {
        self.hyperarcs[q].out.contains(v)
    }

    /// Indicator δ_in: is `v` an input vertex of hyperarc `q` (0-based)?
    pub fn delta_in(&self, v: VertexId, q: usize) -> bool {
        self.hyperarcs[q].in_.contains(v)
    }

    /// `(min_a, max_a)`: minimum and maximum hyperarc cardinality.
    /// Guarantees `2 <= min <= max <= N` for nonempty hypergraphs.
    pub fn cardinality_bounds(&self) -> Result<(usize, usize), CoreError> {
        cardinality_bounds(self.hyperarcs.iter().map(Hyperarc::cardinality))
    }

    /// True when every hyperarc has singleton sides, i.e. the hypergraph is
    /// an embedded normal graph.
    pub fn is_normal_graph(&self) -> bool {
        self.hyperarcs.iter().all(|a| a.cardinality() == 2)
    }
}

/// An unoriented hypergraph: `N` vertices plus an ordered sequence of
/// pairwise distinct hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnorientedHypergraph {
    vertex_count: u32,
    hyperedges: Vec<Hyperedge>,
    deg: Vec<u32>,
}

impl UnorientedHypergraph {
    pub fn new(vertex_count: u32, hyperedges: Vec<Hyperedge>) -> Result<Self, CoreError> {
        if vertex_count == 0 {
            return Err(CoreError::NoVertices);
        }
        let mut deg = vec![0u32; vertex_count as usize];
        let mut seen: HashSet<&VertexSet> = HashSet::new();
        for (pos, edge) in hyperedges.iter().enumerate() {
            if let Some(v) = edge.members.iter().find(|v| v.get() > vertex_count) {
                return Err(CoreError::IndexOutOfRange {
                    index: v.get(),
                    max: vertex_count,
                });
            }
            if !seen.insert(&edge.members) {
                return Err(CoreError::Duplicate { position: pos + 1 });
            }
            for v in edge.members.iter() {
                deg[v.to_index()] += 1;
            }
        }
        Ok(UnorientedHypergraph {
            vertex_count,
            hyperedges,
            deg,
        })
    }

    /// Builds from raw 1-based index sets, validating everything.
    pub fn build(
        vertex_count: u32,
        edges: impl IntoIterator<Item = Vec<u32>>,
    ) -> Result<Self, CoreError> {
        let hyperedges = edges
            .into_iter()
            .map(Hyperedge::from_indices)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertex_count, hyperedges)
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.vertex_count).map(VertexId::new)
    }

    /// Number of hyperedges `M`.
    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    pub fn hyperedge(&self, q: usize) -> &Hyperedge {
        &self.hyperedges[q]
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: VertexId) -> u32 {
        self.deg[v.to_index()]
    }

    /// Is `v` a member of hyperedge `q` (0-based)?
    pub fn contains(&self, v: VertexId, q: usize) -> bool {
        self.hyperedges[q].members.contains(v)
    }

    /// `(min_e, max_e)`: minimum and maximum hyperedge cardinality.
    pub fn cardinality_bounds(&self) -> Result<(usize, usize), CoreError> {
        cardinality_bounds(self.hyperedges.iter().map(Hyperedge::cardinality))
    }

    /// True when every hyperedge has exactly 2 members.
    pub fn is_normal_graph(&self) -> bool {
        self.hyperedges.iter().all(|e| e.cardinality() == 2)
    }
}

fn cardinality_bounds(
    cards: impl Iterator<Item = usize>,
) -> Result<(usize, usize), CoreError> {
    let mut bounds: Option<(usize, usize)> = None;
    for c in cards {
        bounds = Some(match bounds {
            None => (c, c),
            Some((lo, hi)) => (lo.min(c), hi.max(c)),
        });
    }
    bounds.ok_or(CoreError::EmptyHypergraph)
}
