//! Weighted function spaces over hypergraph vertices and hyperarcs.
//!
//! A [`VertexFunction`] assigns a finite real to every vertex; a
//! [`HyperarcFunction`] assigns one to every hyperarc (or hyperedge).
//! A [`WeightAssignment`] carries the four strictly positive weight
//! families:
//!
//! | symbol | domain    | accessor       |
//! |--------|-----------|----------------|
//! | `w_I`  | vertices  | [`WeightAssignment::w_i`] |
//! | `w_G`  | vertices  | [`WeightAssignment::w_g`] |
//! | `W_I`  | hyperarcs | [`WeightAssignment::big_w_i`] |
//! | `W_G`  | hyperarcs | [`WeightAssignment::big_w_g`] |
//!
//! On top of these sit the weighted inner products
//! ⟨f, g⟩ = Σ_i w_I(v_i)^α f(v_i) g(v_i) and
//! ⟨F, G⟩ = Σ_q W_I(a_q)^β F(a_q) G(a_q), the Lᵖ norms (the hyperarc
//! norm carries a ½ factor inside the sum, the vertex norm does not),
//! and weight normalization onto (0, 1].
//!
//! Everything here is a pure function over immutable data and safe to
//! share across threads.

mod error;
mod functions;
mod measure;
mod weights;

pub use error::SpaceError;
pub use functions::{HyperarcFunction, VertexFunction};
pub use measure::{
    hyperarc_inner_product, hyperarc_lp_norm, normalize_weights, vertex_inner_product,
    vertex_lp_norm,
};
pub use weights::WeightAssignment;
