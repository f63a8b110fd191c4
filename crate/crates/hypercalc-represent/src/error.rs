use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepresentError {
    /// A connected component admits no two-coloring, so it cannot be a
    /// bipartite expansion.
    #[error("component containing vertex {component} is not bipartite")]
    NotBipartite { component: u32 },
    /// No anchor hint falls inside this connected component; its two color
    /// classes cannot be told apart.
    #[error("no anchor hint for the component containing vertex {component}")]
    MissingHint { component: u32 },
    /// The labeled graph cannot be an expansion of any hypergraph.
    #[error("graph is not a valid expansion: {detail}")]
    InvalidStructure { detail: String },
    /// Side or edge sizes outside the defined range.
    #[error("invalid size: {detail}")]
    InvalidSize { detail: String },
}
