use std::collections::{HashSet, VecDeque};

use crate::error::CoreError;
use crate::hypergraph::{Hyperarc, Hyperedge, OrientedHypergraph, UnorientedHypergraph};
use crate::ids::{VertexId, VertexSet};

/// A directed arc `(tail, head)` between two distinct vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    tail: VertexId,
    head: VertexId,
}

impl Arc {
    pub fn new(tail: VertexId, head: VertexId) -> Result<Self, CoreError> {
        if tail == head {
            return Err(CoreError::SelfLoop { v: tail.get() });
        }
        Ok(Arc { tail, head })
    }

    pub fn tail(&self) -> VertexId {
        self.tail
    }

    pub fn head(&self) -> VertexId {
        self.head
    }

    pub fn switched(&self) -> Arc {
        Arc {
            tail: self.head,
            head: self.tail,
        }
    }
}

/// An undirected edge between two distinct vertices, stored with the smaller
/// id first so `{a, b}` and `{b, a}` compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    lo: VertexId,
    hi: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self, CoreError> {
        if a == b {
            return Err(CoreError::SelfLoop { v: a.get() });
        }
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Ok(Edge { lo, hi })
    }

    pub fn lo(&self) -> VertexId {
        self.lo
    }

    pub fn hi(&self) -> VertexId {
        self.hi
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.lo, self.hi)
    }
}

/// A directed graph without self-loops or parallel arcs; antiparallel arcs
/// `(i, j)` and `(j, i)` may coexist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedNormalGraph {
    vertex_count: u32,
    arcs: Vec<Arc>,
    deg_out: Vec<u32>,
    deg_in: Vec<u32>,
}

impl OrientedNormalGraph {
    pub fn new(vertex_count: u32, arcs: Vec<Arc>) -> Result<Self, CoreError> {
        if vertex_count == 0 {
            return Err(CoreError::NoVertices);
        }
        let mut deg_out = vec![0u32; vertex_count as usize];
        let mut deg_in = vec![0u32; vertex_count as usize];
        let mut seen: HashSet<(VertexId, VertexId)> = HashSet::new();
        for (pos, arc) in arcs.iter().enumerate() {
            for v in [arc.tail, arc.head] {
                if v.get() > vertex_count {
                    return Err(CoreError::IndexOutOfRange {
                        index: v.get(),
                        max: vertex_count,
                    });
                }
            }
            if !seen.insert((arc.tail, arc.head)) {
                return Err(CoreError::Duplicate { position: pos + 1 });
            }
            deg_out[arc.tail.to_index()] += 1;
            deg_in[arc.head.to_index()] += 1;
        }
        Ok(OrientedNormalGraph {
            vertex_count,
            arcs,
            deg_out,
            deg_in,
        })
    }

    /// Builds from raw 1-based `(tail, head)` pairs, validating everything.
    pub fn build(
        vertex_count: u32,
        arcs: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, CoreError> {
        let arcs = arcs
            .into_iter()
            .map(|(t, h)| Arc::new(VertexId::try_new(t)?, VertexId::try_new(h)?))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertex_count, arcs)
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.vertex_count).map(VertexId::new)
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, q: usize) -> &Arc {
        &self.arcs[q]
    }

    /// Arc indicator δ(v_i, v_j): does the graph contain the arc `(i, j)`?
    pub fn has_arc(&self, tail: VertexId, head: VertexId) -> bool {
        self.arcs.iter().any(|a| a.tail == tail && a.head == head)
    }

    pub fn degree_out(&self, v: VertexId) -> u32 {
        self.deg_out[v.to_index()]
    }

    pub fn degree_in(&self, v: VertexId) -> u32 {
        self.deg_in[v.to_index()]
    }

    pub fn degree(&self, v: VertexId) -> u32 {
        self.deg_out[v.to_index()] + self.deg_in[v.to_index()]
    }

    /// Every arc reversed, preserving positions.
    pub fn switched(&self) -> OrientedNormalGraph {
        OrientedNormalGraph {
            vertex_count: self.vertex_count,
            arcs: self.arcs.iter().map(Arc::switched).collect(),
            deg_out: self.deg_in.clone(),
            deg_in: self.deg_out.clone(),
        }
    }

    /// Extracts the normal graph from a hypergraph whose hyperarcs all have
    /// singleton sides; `None` when any side holds more than one vertex.
    /// Inverse of [`OrientedNormalGraph::as_hypergraph`].
    pub fn from_hypergraph(h: &OrientedHypergraph) -> Option<Self> {
        let arcs = h
            .hyperarcs()
            .iter()
            .map(|a| {
                if a.cardinality() == 2 && a.out_set().len() == 1 {
                    Arc::new(a.out_set().as_slice()[0], a.in_set().as_slice()[0]).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(h.vertex_count(), arcs).expect("valid hypergraph restricts to valid graph"))
    }

    /// The same graph viewed as an oriented hypergraph with singleton sides.
    /// Degrees, indicators, and positions carry over unchanged.
    pub fn as_hypergraph(&self) -> OrientedHypergraph {
        let hyperarcs = self
            .arcs
            .iter()
            .map(|a| {
                Hyperarc::new(
                    VertexSet::new([a.tail]),
                    VertexSet::new([a.head]),
                )
                .expect("singleton sides of a valid arc are disjoint and nonempty")
            })
            .collect();
        OrientedHypergraph::new(self.vertex_count, hyperarcs)
            .expect("a valid graph embeds as a valid hypergraph")
    }
}

/// An undirected graph without self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnorientedNormalGraph {
    vertex_count: u32,
    edges: Vec<Edge>,
    deg: Vec<u32>,
}

impl UnorientedNormalGraph {
    pub fn new(vertex_count: u32, edges: Vec<Edge>) -> Result<Self, CoreError> {
        if vertex_count == 0 {
            return Err(CoreError::NoVertices);
        }
        let mut deg = vec![0u32; vertex_count as usize];
        let mut seen: HashSet<(VertexId, VertexId)> = HashSet::new();
        for (pos, edge) in edges.iter().enumerate() {
            for v in [edge.lo, edge.hi] {
                if v.get() > vertex_count {
                    return Err(CoreError::IndexOutOfRange {
                        index: v.get(),
                        max: vertex_count,
                    });
                }
            }
            if !seen.insert((edge.lo, edge.hi)) {
                return Err(CoreError::Duplicate { position: pos + 1 });
            }
            deg[edge.lo.to_index()] += 1;
            deg[edge.hi.to_index()] += 1;
        }
        Ok(UnorientedNormalGraph {
            vertex_count,
            edges,
            deg,
        })
    }

    /// Builds from raw 1-based endpoint pairs, validating everything.
    pub fn build(
        vertex_count: u32,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, CoreError> {
        let edges = edges
            .into_iter()
            .map(|(a, b)| Edge::new(VertexId::try_new(a)?, VertexId::try_new(b)?))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.vertex_count).map(VertexId::new)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, q: usize) -> &Edge {
        &self.edges[q]
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        Edge::new(a, b).is_ok_and(|e| self.edges.contains(&e))
    }

    pub fn degree(&self, v: VertexId) -> u32 {
        self.deg[v.to_index()]
    }

    /// Extracts the normal graph from a hypergraph whose hyperedges all have
    /// exactly 2 members; `None` otherwise. Inverse of
    /// [`UnorientedNormalGraph::as_hypergraph`].
    pub fn from_hypergraph(h: &UnorientedHypergraph) -> Option<Self> {
        let edges = h
            .hyperedges()
            .iter()
            .map(|e| {
                let m = e.members().as_slice();
                if m.len() == 2 {
                    Edge::new(m[0], m[1]).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(h.vertex_count(), edges).expect("valid hypergraph restricts to valid graph"))
    }

    /// The same graph viewed as an unoriented hypergraph with 2-element
    /// hyperedges.
    pub fn as_hypergraph(&self) -> UnorientedHypergraph {
        let hyperedges = self
            .edges
            .iter()
            .map(|e| {
                Hyperedge::new(VertexSet::new([e.lo, e.hi]))
                    .expect("a valid edge has two distinct endpoints")
            })
            .collect();
        UnorientedHypergraph::new(self.vertex_count, hyperedges)
            .expect("a valid graph embeds as a valid hypergraph")
    }

    /// Neighbors of `v`, each listed once.
    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.lo == v {
                    Some(e.hi)
                } else if e.hi == v {
                    Some(e.lo)
                } else {
                    None
                }
            })
            .collect()
    }
}

/// A connected component together with its two-coloring, when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// All vertices of the component (isolated vertices form singletons).
    pub vertices: VertexSet,
    /// `Some((left, right))` iff the component is bipartite: every edge joins
    /// the two classes. The class containing the smallest vertex id is `left`.
    pub bipartition: Option<(VertexSet, VertexSet)>,
}

/// Connected components of an undirected graph, ordered by smallest member.
pub fn connected_components_unoriented(g: &UnorientedNormalGraph) -> Vec<Component> {
    let n = g.vertex_count() as usize;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.lo.to_index()].push(e.hi.get());
        adj[e.hi.to_index()].push(e.lo.get());
    }
    components_from_adjacency(n, &adj)
}

/// Weakly connected components of a directed graph (arc direction ignored),
/// ordered by smallest member. Bipartitions likewise ignore direction.
pub fn connected_components_oriented(g: &OrientedNormalGraph) -> Vec<Component> {
    let n = g.vertex_count() as usize;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for a in g.arcs() {
        adj[a.tail.to_index()].push(a.head.get());
        adj[a.head.to_index()].push(a.tail.get());
    }
    components_from_adjacency(n, &adj)
}

fn components_from_adjacency(n: usize, adj: &[Vec<u32>]) -> Vec<Component> {
    // color: 0 = unvisited, 1 / 2 = the two BFS classes.
    let mut color = vec![0u8; n];
    let mut components = Vec::new();
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        let mut members = Vec::new();
        let mut bipartite = true;
        let mut queue = VecDeque::from([start]);
        color[start] = 1;
        while let Some(u) = queue.pop_front() {
            members.push(u);
            for &w in &adj[u] {
                let w = (w - 1) as usize;
                if color[w] == 0 {
                    color[w] = 3 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    bipartite = false;
                }
            }
        }
        let class = |c: u8| -> VertexSet {
            members
                .iter()
                .filter(|&&u| color[u] == c)
                .map(|&u| VertexId::from_index(u))
                .collect()
        };
        let bipartition = bipartite.then(|| (class(1), class(2)));
        components.push(Component {
            vertices: members.iter().map(|&u| VertexId::from_index(u)).collect(),
            bipartition,
        });
    }
    components.sort_by_key(|c| c.vertices.as_slice()[0]);
    components
}
