use hypercalc_core::{
    OrientedHypergraph, OrientedNormalGraph, UnorientedHypergraph, UnorientedNormalGraph, VertexId,
};

/// Vertices × hyperarcs incidence matrix. Oriented entries are +1 for the
/// output side, −1 for the input side, 0 otherwise; unoriented entries are
/// 1 for membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: u32,
    cols: usize,
    // Row-major; rows indexed by vertex, columns by hyperarc/hyperedge.
    data: Vec<i8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, v: VertexId, q: usize) -> i8 {
        self.data[v.to_index() * self.cols + q]
    }

    /// Entries of column q from vertex 1 downwards.
    pub fn column(&self, q: usize) -> impl Iterator<Item = i8> + '_ {
        (0..self.rows as usize).map(move |row| self.data[row * self.cols + q])
    }

    /// Entries of the row for vertex v.
    pub fn row(&self, v: VertexId) -> &[i8] {
        let start = v.to_index() * self.cols;
        &self.data[start..start + self.cols]
    }
}

/// Incidence matrix of an oriented hypergraph (+1 output, −1 input).
pub fn incidence_matrix_oriented(h: &OrientedHypergraph) -> IncidenceMatrix {
    let rows = h.vertex_count();
    let cols = h.hyperarc_count();
    let mut data = vec![0i8; rows as usize * cols];
    for (q, arc) in h.hyperarcs().iter().enumerate() {
        for v in arc.out_set() {
            data[v.to_index() * cols + q] = 1;
        }
        for v in arc.in_set() {
            data[v.to_index() * cols + q] = -1;
        }
    }
    IncidenceMatrix { rows, cols, data }
}

/// Incidence matrix of an unoriented hypergraph (1 for membership).
pub fn incidence_matrix_unoriented(h: &UnorientedHypergraph) -> IncidenceMatrix {
    let rows = h.vertex_count();
    let cols = h.hyperedge_count();
    let mut data = vec![0i8; rows as usize * cols];
    for (q, edge) in h.hyperedges().iter().enumerate() {
        for v in edge.members() {
            data[v.to_index() * cols + q] = 1;
        }
    }
    IncidenceMatrix { rows, cols, data }
}

/// N × N 0/1 adjacency matrix of a normal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    dim: u32,
    data: Vec<u8>,
}

impl AdjacencyMatrix {
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn entry(&self, i: VertexId, j: VertexId) -> u8 {
        self.data[i.to_index() * self.dim as usize + j.to_index()]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim as usize;
        (0..n).all(|i| (0..n).all(|j| self.data[i * n + j] == self.data[j * n + i]))
    }
}

/// Adjacency matrix of an oriented normal graph: (i, j) = 1 iff the arc
/// (v_i, v_j) exists.
pub fn adjacency_matrix_oriented(g: &OrientedNormalGraph) -> AdjacencyMatrix {
    let dim = g.vertex_count();
    let mut data = vec![0u8; dim as usize * dim as usize];
    for arc in g.arcs() {
        data[arc.tail().to_index() * dim as usize + arc.head().to_index()] = 1;
    }
    AdjacencyMatrix { dim, data }
}

/// Adjacency matrix of an unoriented normal graph; always symmetric.
pub fn adjacency_matrix_unoriented(g: &UnorientedNormalGraph) -> AdjacencyMatrix {
    let dim = g.vertex_count();
    let mut data = vec![0u8; dim as usize * dim as usize];
    for edge in g.edges() {
        data[edge.lo().to_index() * dim as usize + edge.hi().to_index()] = 1;
        data[edge.hi().to_index() * dim as usize + edge.lo().to_index()] = 1;
    }
    AdjacencyMatrix { dim, data }
}
