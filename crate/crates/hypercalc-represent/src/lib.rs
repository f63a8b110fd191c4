//! Normal-graph representations of hypergraphs.
//!
//! Two lossy-in-general encodings, with the exact conditions under which
//! they invert:
//!
//! * **star expansion** ([`to_bipartite_unoriented`] /
//!   [`to_bipartite_oriented`]) — vertex N+q stands for hyperedge/hyperarc
//!   q; always bipartite. Inverting needs one [`AnchorHint`] per connected
//!   component ([`from_bipartite_unoriented`] / [`from_bipartite_oriented`]),
//!   because a component's two-coloring is unique only up to the swap;
//!   [`infer_anchors_unoriented`] / [`infer_anchors_oriented`] recover
//!   hints from cardinality bounds where degrees betray the original side.
//! * **clique expansion** ([`to_clique_unoriented`] /
//!   [`to_clique_oriented`]) — hyperedges become complete subgraphs, with
//!   multiplicities counting how many hyperedges cover a pair. Not
//!   invertible; only the forward map exists.
//!
//! Law sheet (all checked by tests):
//!
//! | law | statement |
//! |-----|-----------|
//! | bipartite | star expansions two-color into originals and encoders |
//! | degrees | encoder degree = cardinality; original degree = hypergraph degree |
//! | roundtrip | `from_bipartite(to_bipartite(H), ground truth) = H` |
//! | ambiguity | one expansion graph reconstructs differently per anchor role; the paper pair of clique expansions is a collision |
//! | counting | a lone hyperedge/hyperarc yields exactly [`clique_edge_count_unoriented`] / [`clique_edge_count_oriented`] edges |
//!
//! Everything is a pure function over immutable inputs; safe to call
//! concurrently on shared hypergraphs.

mod clique;
mod error;
mod star;

pub use clique::{
    clique_edge_count_oriented, clique_edge_count_unoriented, to_clique_oriented,
    to_clique_unoriented, MultiGraph,
};
pub use error::RepresentError;
pub use star::{
    from_bipartite_oriented, from_bipartite_unoriented, infer_anchors_oriented,
    infer_anchors_unoriented, to_bipartite_oriented, to_bipartite_unoriented, AnchorHint,
    AnchorHints, InferredAnchors, OrientedReconstruction, OrientedStarExpansion,
    UnorientedReconstruction, UnorientedStarExpansion, VertexRole,
};
