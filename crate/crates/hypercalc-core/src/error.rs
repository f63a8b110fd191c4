use thiserror::Error;

/// Structural validation failures for hypergraphs and normal graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// A vertex index lies outside `1..=N`.
    #[error("vertex index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u32, max: u32 },

    /// A hyperarc side is empty.
    #[error("hyperarc sides must both be nonempty")]
    EmptySide,

    /// Output and input side of a hyperarc share a vertex.
    #[error("hyperarc output and input sides overlap")]
    Overlap,

    /// A hyperedge has fewer than 2 members.
    #[error("hyperedge needs at least 2 vertices, got {size}")]
    TooSmall { size: usize },

    /// Two hyperarcs/hyperedges/arcs/edges are equal as sets.
    #[error("duplicate entry at position {position} (1-based)")]
    Duplicate { position: usize },

    /// An operation required at least one hyperarc or hyperedge.
    #[error("structure has no hyperarcs or hyperedges")]
    EmptyHypergraph,

    /// Vertex count must be at least 1.
    #[error("vertex count must be at least 1")]
    NoVertices,

    /// A normal-graph arc or edge connects a vertex to itself.
    #[error("arc or edge endpoints must differ, got vertex {v} twice")]
    SelfLoop { v: u32 },

    /// Feasibility counting requires at least 2 vertices.
    #[error("feasibility counting requires N >= 2, got {n}")]
    CountTooSmall { n: u32 },
}
