//! Discrete first-order calculus on weighted oriented hypergraphs.
//!
//! Two operator families share one parameterization ([`OperatorConfig`]):
//!
//! * **vertex family** — functions on vertices are differentiated across
//!   hyperarcs: [`vertex_gradient`], [`vertex_adjoint`],
//!   [`vertex_divergence`], [`vertex_laplacian`], [`vertex_p_laplacian`];
//! * **hyperarc family** — functions on hyperarcs are differentiated
//!   across vertices: [`hyperarc_gradient`], [`hyperarc_adjoint`],
//!   [`hyperarc_divergence`], [`hyperarc_laplacian`],
//!   [`hyperarc_p_laplacian`].
//!
//! Law sheet (all checked by tests):
//!
//! | law | statement |
//! |-----|-----------|
//! | duality | ⟨G, ∇_v f⟩_β = ⟨f, ∇*_v G⟩_α and ⟨f, ∇_a G⟩_α = ⟨G, ∇*_a f⟩_β (Mirror modes) |
//! | divergence | div = −∇* in every mode |
//! | composition | Δ = div∘∇ and Δᵖ = div(\|∇\|^{p−2}∇), all modes |
//! | collapse | p = 2 reduces the p-Laplacian to the Laplacian |
//! | reduction | on graphs embedded as hypergraphs, every operator equals its graph reference formula |
//! | constants | gradients of suitably weighted constant functions vanish |
//! | antisymmetry | switching the orientation negates gradients under symmetric weights |
//!
//! Sums range only over incident vertex–hyperarc pairs, so cardinality and
//! degree reciprocals are never evaluated for non-incident pairs; isolated
//! vertices map to 0. The p-Laplacians accept finite `p > 1` only, with
//! `|x|^{p−2}·x` continuously extended by 0 at the origin.
//!
//! Graph-specific closed forms (the `graph_*` functions) serve as
//! independent references, and [`jost_vertex_p_laplacian`] /
//! [`jost_hyperarc_p_laplacian`] evaluate the simplified unweighted
//! p-Laplacians that the [`Preset::JostVertex`] / [`Preset::JostHyperarc`]
//! configurations reproduce.
//!
//! Everything is a pure function over immutable inputs; safe to call
//! concurrently on shared hypergraphs.

mod config;
mod error;
mod graph_ref;
mod hyperarc;
mod jost;
mod phi;
mod support;
mod vertex;

pub use config::{
    HyperarcAdjointMode, HyperarcDegreeMode, Method, OperatorConfig, Preset,
    VertexAdjointMode, VertexCardinalityMode,
};
pub use error::OperatorError;
pub use graph_ref::{
    graph_arc_adjoint, graph_arc_divergence, graph_arc_gradient, graph_arc_laplacian,
    graph_arc_p_laplacian, graph_vertex_adjoint, graph_vertex_divergence,
    graph_vertex_gradient, graph_vertex_laplacian, graph_vertex_p_laplacian,
};
pub use hyperarc::{
    hyperarc_adjoint, hyperarc_divergence, hyperarc_gradient, hyperarc_laplacian,
    hyperarc_p_laplacian,
};
pub use jost::{jost_hyperarc_p_laplacian, jost_vertex_p_laplacian};
pub use phi::signed_power;
pub use vertex::{
    vertex_adjoint, vertex_divergence, vertex_gradient, vertex_laplacian, vertex_p_laplacian,
};
