//! Hypergraph and normal-graph data structures with validation.
//!
//! An oriented hypergraph connects vertices `v_1..v_N` through hyperarcs,
//! each a pair of disjoint nonempty vertex sets (output side, input side).
//! An unoriented hypergraph uses hyperedges: plain vertex sets of size ≥ 2.
//! Normal graphs (arcs/edges between exactly two vertices) are the special
//! case where every side is a singleton; [`OrientedNormalGraph::as_hypergraph`]
//! and [`UnorientedNormalGraph::as_hypergraph`] perform that embedding.
//!
//! Guaranteed invariants, checked at construction:
//!
//! | structure              | invariant                                            |
//! |------------------------|------------------------------------------------------|
//! | `Hyperarc`             | both sides nonempty, disjoint                        |
//! | `Hyperedge`            | at least 2 members                                   |
//! | `OrientedHypergraph`   | members in `1..=N`, hyperarcs pairwise distinct      |
//! | `UnorientedHypergraph` | members in `1..=N`, hyperedges pairwise distinct     |
//! | normal graphs          | endpoints distinct, no duplicate arcs/edges          |
//!
//! Vertex and hyperarc indices are 1-based in every external interface;
//! hyperarcs are addressed by their position in the input sequence.
//! All types are immutable after construction and all operations are pure,
//! so shared structures are safe to use concurrently.

mod counting;
mod error;
mod graph;
mod hypergraph;
mod ids;

pub use counting::{count_feasible, count_feasible_capped, FeasibleKind};
pub use error::CoreError;
pub use graph::{
    connected_components_oriented, connected_components_unoriented, Arc, Component, Edge,
    OrientedNormalGraph, UnorientedNormalGraph,
};
pub use hypergraph::{Hyperarc, Hyperedge, OrientedHypergraph, UnorientedHypergraph};
pub use ids::{VertexId, VertexSet};
