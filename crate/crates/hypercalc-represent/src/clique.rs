use std::collections::BTreeMap;

use hypercalc_core::{OrientedHypergraph, UnorientedHypergraph, VertexId};

use crate::error::RepresentError;

/// Normal graph with edge/arc multiplicities. Unoriented entries are stored
/// with the smaller endpoint first; oriented entries are ordered pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    oriented: bool,
    vertex_count: u32,
    multiplicities: BTreeMap<(u32, u32), u64>,
}

impl MultiGraph {
    /// Assembles a multigraph from explicit entries (deserialization and
    /// hand-built fixtures). Endpoints must be distinct ids in
    /// `1..=vertex_count` and multiplicities positive; unoriented endpoint
    /// pairs are normalized to smaller-first and must not repeat.
    pub fn from_entries(
        oriented: bool,
        vertex_count: u32,
        entries: impl IntoIterator<Item = ((u32, u32), u64)>,
    ) -> Result<Self, RepresentError> {
        let mut multiplicities = BTreeMap::new();
        for ((a, b), m) in entries {
            for id in [a, b] {
                if id == 0 || id > vertex_count {
                    return Err(RepresentError::InvalidStructure {
                        detail: format!("endpoint {id} outside 1..={vertex_count}"),
                    });
                }
            }
            if a == b {
                return Err(RepresentError::InvalidStructure {
                    detail: format!("self-loop at vertex {a}"),
                });
            }
            if m == 0 {
                return Err(RepresentError::InvalidStructure {
                    detail: format!("zero multiplicity on ({a}, {b})"),
                });
            }
            let key = if oriented { (a, b) } else { (a.min(b), a.max(b)) };
            if multiplicities.insert(key, m).is_some() {
                return Err(RepresentError::InvalidStructure {
                    detail: format!("repeated entry ({}, {})", key.0, key.1),
                });
            }
        }
        Ok(MultiGraph {
            oriented,
            vertex_count,
            multiplicities,
        })
    }

    pub fn oriented(&self) -> bool {
        self.oriented
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    /// Number of distinct edges/arcs.
    pub fn distinct_count(&self) -> usize {
        self.multiplicities.len()
    }

    /// Number of edges/arcs counted with multiplicity.
    pub fn total_count(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    /// Multiplicity of `{a, b}` (unoriented, order-insensitive) or `(a, b)`.
    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> u64 {
        let key = if self.oriented {
            (a.get(), b.get())
        } else {
            (a.get().min(b.get()), a.get().max(b.get()))
        };
        self.multiplicities.get(&key).copied().unwrap_or(0)
    }

    /// Entries as `((endpoint, endpoint), multiplicity)` in sorted order.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.multiplicities.iter().map(|(&pair, &m)| (pair, m))
    }

    fn bump(&mut self, a: u32, b: u32) {
        let key = if self.oriented {
            (a, b)
        } else {
            (a.min(b), a.max(b))
        };
        *self.multiplicities.entry(key).or_insert(0) += 1;
    }
}

/// Clique expansion: every hyperedge becomes a complete graph on its
/// members, and pairs shared by several hyperedges keep one edge per
/// hyperedge.
pub fn to_clique_unoriented(h: &UnorientedHypergraph) -> MultiGraph {
    let mut g = MultiGraph {
        oriented: false,
        vertex_count: h.vertex_count(),
        multiplicities: BTreeMap::new(),
    };
    for edge in h.hyperedges() {
        let members = edge.members().as_slice();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                g.bump(a.get(), b.get());
            }
        }
    }
    g
}

/// Clique expansion of an oriented hypergraph: each hyperarc contributes
/// arcs in both directions within its output set and within its input set,
/// and one arc from every output vertex to every input vertex.
pub fn to_clique_oriented(h: &OrientedHypergraph) -> MultiGraph {
    let mut g = MultiGraph {
        oriented: true,
        vertex_count: h.vertex_count(),
        multiplicities: BTreeMap::new(),
    };
    for arc in h.hyperarcs() {
        let out = arc.out_set().as_slice();
        let in_ = arc.in_set().as_slice();
        for side in [out, in_] {
            for a in side {
                for b in side {
                    if a != b {
                        g.bump(a.get(), b.get());
                    }
                }
            }
        }
        for a in out {
            for b in in_ {
                g.bump(a.get(), b.get());
            }
        }
    }
    g
}

/// Edges a lone hyperedge of the given size contributes: |e|(|e|−1)/2.
pub fn clique_edge_count_unoriented(edge_size: usize) -> Result<u64, RepresentError> {
    if edge_size < 2 {
        return Err(RepresentError::InvalidSize {
            detail: format!("hyperedge size {edge_size} is below 2"),
        });
    }
    let k = edge_size as u64;
    Ok(k * (k - 1) / 2)
}

/// Arcs a lone hyperarc contributes:
/// |out|(|out|−1) + |in|(|in|−1) + |out||in|.
pub fn clique_edge_count_oriented(
    out_size: usize,
    in_size: usize,
) -> Result<u64, RepresentError> {
    if out_size < 1 || in_size < 1 {
        return Err(RepresentError::InvalidSize {
            detail: format!("hyperarc sides ({out_size},{in_size}) must both be nonempty"),
        });
    }
    let (r, t) = (out_size as u64, in_size as u64);
    Ok(r * (r - 1) + t * (t - 1) + r * t)
}
