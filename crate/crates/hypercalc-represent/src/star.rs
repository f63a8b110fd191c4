use std::collections::BTreeMap;

use hypercalc_core::{
    connected_components_oriented, connected_components_unoriented, Component,
    OrientedHypergraph, OrientedNormalGraph, UnorientedHypergraph, UnorientedNormalGraph,
    VertexId,
};

use crate::error::RepresentError;

/// Which side of an expansion a vertex belongs to: a hypergraph vertex or
/// the stand-in for a hyperedge/hyperarc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    Original,
    Encoder,
}

/// One known vertex classification inside an expansion graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnchorHint {
    pub vertex: VertexId,
    pub role: VertexRole,
}

impl AnchorHint {
    pub fn new(vertex: VertexId, role: VertexRole) -> Self {
        AnchorHint { vertex, role }
    }
}

/// Anchor hints for reconstruction. Two-colorings are unique per connected
/// component only up to swapping the classes; one hint per component breaks
/// the tie.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AnchorHints {
    hints: Vec<AnchorHint>,
}

impl AnchorHints {
    pub fn new(hints: Vec<AnchorHint>) -> Self {
        AnchorHints { hints }
    }

    pub fn hints(&self) -> &[AnchorHint] {
        &self.hints
    }

    pub fn is_empty(&self) -> bool {
        self.hints.is_empty()
    }

    /// First hint that falls inside the given component.
    fn find_in(&self, component: &Component) -> Option<AnchorHint> {
        self.hints
            .iter()
            .copied()
            .find(|hint| component.vertices.contains(hint.vertex))
    }
}

impl FromIterator<AnchorHint> for AnchorHints {
    fn from_iter<I: IntoIterator<Item = AnchorHint>>(iter: I) -> Self {
        AnchorHints::new(iter.into_iter().collect())
    }
}

/// Star expansion of an unoriented hypergraph: vertices 1..=N are the
/// originals, vertex N+q stands for hyperedge e_q, and each membership
/// v ∈ e_q becomes the edge {v, N+q}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnorientedStarExpansion {
    graph: UnorientedNormalGraph,
    original_count: u32,
    anchors: AnchorHints,
}

/// Star expansion of an oriented hypergraph: v ∈ a_q^out becomes the arc
/// (v, N+q) and v ∈ a_q^in becomes (N+q, v), so arc directions store the
/// side each original vertex is on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedStarExpansion {
    graph: OrientedNormalGraph,
    original_count: u32,
    anchors: AnchorHints,
}

macro_rules! expansion_accessors {
    ($graph:ty) => {
        pub fn graph(&self) -> &$graph {
            &self.graph
        }

        pub fn original_count(&self) -> u32 {
            self.original_count
        }

        pub fn encoder_count(&self) -> u32 {
            self.graph.vertex_count() - self.original_count
        }

        /// Ground-truth hints: the smallest vertex of every connected
        /// component with its true role.
        pub fn anchors(&self) -> &AnchorHints {
            &self.anchors
        }
    };
}

impl UnorientedStarExpansion {
    expansion_accessors!(UnorientedNormalGraph);
}

impl OrientedStarExpansion {
    expansion_accessors!(OrientedNormalGraph);
}

fn ground_truth_anchors(components: &[Component], original_count: u32) -> AnchorHints {
    components
        .iter()
        .map(|component| {
            let vertex = component.vertices.as_slice()[0];
            let role = if vertex.get() <= original_count {
                VertexRole::Original
            } else {
                VertexRole::Encoder
            };
            AnchorHint::new(vertex, role)
        })
        .collect()
}

pub fn to_bipartite_unoriented(h: &UnorientedHypergraph) -> UnorientedStarExpansion {
    let n = h.vertex_count();
    let total = n + h.hyperedge_count() as u32;
    let mut edges = Vec::new();
    for (q, edge) in h.hyperedges().iter().enumerate() {
        let encoder = n + q as u32 + 1;
        for v in edge.members().iter() {
            edges.push((v.get(), encoder));
        }
    }
    let graph =
        UnorientedNormalGraph::build(total, edges).expect("expansion is valid by construction");
    let anchors = ground_truth_anchors(&connected_components_unoriented(&graph), n);
    UnorientedStarExpansion {
        graph,
        original_count: n,
        anchors,
    }
}

pub fn to_bipartite_oriented(h: &OrientedHypergraph) -> OrientedStarExpansion {
    let n = h.vertex_count();
    let total = n + h.hyperarc_count() as u32;
    let mut arcs = Vec::new();
    for (q, arc) in h.hyperarcs().iter().enumerate() {
        let encoder = n + q as u32 + 1;
        for v in arc.out_set().iter() {
            arcs.push((v.get(), encoder));
        }
        for v in arc.in_set().iter() {
            arcs.push((encoder, v.get()));
        }
    }
    let graph =
        OrientedNormalGraph::build(total, arcs).expect("expansion is valid by construction");
    let anchors = ground_truth_anchors(&connected_components_oriented(&graph), n);
    OrientedStarExpansion {
        graph,
        original_count: n,
        anchors,
    }
}

/// Hypergraph recovered from an expansion graph, together with the graph
/// vertices behind its vertex and hyperedge/hyperarc indices: hypergraph
/// vertex i was graph vertex `original_ids[i−1]`, hyperedge/hyperarc q was
/// encoded by `encoder_ids[q−1]`. Both lists ascend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnorientedReconstruction {
    pub hypergraph: UnorientedHypergraph,
    pub original_ids: Vec<VertexId>,
    pub encoder_ids: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedReconstruction {
    pub hypergraph: OrientedHypergraph,
    pub original_ids: Vec<VertexId>,
    pub encoder_ids: Vec<VertexId>,
}

/// Splits every component's vertices into originals and encoders using the
/// hints. Singleton components are originals outright: an encoder needs at
/// least two neighbors, so its component has at least three vertices.
fn classify(
    components: &[Component],
    hints: &AnchorHints,
) -> Result<(Vec<VertexId>, Vec<VertexId>), RepresentError> {
    let mut originals = Vec::new();
    let mut encoders = Vec::new();
    for component in components {
        let lowest = component.vertices.as_slice()[0];
        if component.vertices.len() == 1 {
            if hints
                .find_in(component)
                .is_some_and(|hint| hint.role == VertexRole::Encoder)
            {
                return Err(RepresentError::InvalidStructure {
                    detail: format!(
                        "vertex {} is isolated but hinted as an encoder",
                        lowest.get()
                    ),
                });
            }
            originals.push(lowest);
            continue;
        }
        let Some((left, right)) = component.bipartition.as_ref() else {
            return Err(RepresentError::NotBipartite {
                component: lowest.get(),
            });
        };
        let Some(hint) = hints.find_in(component) else {
            return Err(RepresentError::MissingHint {
                component: lowest.get(),
            });
        };
        let hint_in_left = left.contains(hint.vertex);
        let left_is_original = hint_in_left == (hint.role == VertexRole::Original);
        let (original_class, encoder_class) = if left_is_original {
            (left, right)
        } else {
            (right, left)
        };
        originals.extend(original_class.iter());
        encoders.extend(encoder_class.iter());
    }
    originals.sort();
    encoders.sort();
    Ok((originals, encoders))
}

fn relabeling(originals: &[VertexId]) -> BTreeMap<VertexId, u32> {
    originals
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect()
}

pub fn from_bipartite_unoriented(
    g: &UnorientedNormalGraph,
    hints: &AnchorHints,
) -> Result<UnorientedReconstruction, RepresentError> {
    let components = connected_components_unoriented(g);
    let (originals, encoders) = classify(&components, hints)?;
    let labels = relabeling(&originals);
    let mut edges = Vec::with_capacity(encoders.len());
    for &encoder in &encoders {
        let members: Vec<u32> = g
            .neighbors(encoder)
            .iter()
            .map(|v| labels[&v])
            .collect();
        if members.len() < 2 {
            return Err(RepresentError::InvalidStructure {
                detail: format!(
                    "encoder vertex {} has degree {} < 2",
                    encoder.get(),
                    members.len()
                ),
            });
        }
        edges.push(members);
    }
    let hypergraph = UnorientedHypergraph::build(originals.len() as u32, edges)
        .map_err(|e| RepresentError::InvalidStructure {
            detail: e.to_string(),
        })?;
    Ok(UnorientedReconstruction {
        hypergraph,
        original_ids: originals,
        encoder_ids: encoders,
    })
}

pub fn from_bipartite_oriented(
    g: &OrientedNormalGraph,
    hints: &AnchorHints,
) -> Result<OrientedReconstruction, RepresentError> {
    let components = connected_components_oriented(g);
    let (originals, encoders) = classify(&components, hints)?;
    let labels = relabeling(&originals);
    // In-neighbors of an encoder are the output side, out-neighbors the
    // input side.
    let mut out_sides: BTreeMap<VertexId, Vec<u32>> =
        encoders.iter().map(|&e| (e, Vec::new())).collect();
    let mut in_sides: BTreeMap<VertexId, Vec<u32>> =
        encoders.iter().map(|&e| (e, Vec::new())).collect();
    for arc in g.arcs() {
        if let Some(side) = out_sides.get_mut(&arc.head()) {
            side.push(labels[&arc.tail()]);
        }
        if let Some(side) = in_sides.get_mut(&arc.tail()) {
            side.push(labels[&arc.head()]);
        }
    }
    let mut arcs = Vec::with_capacity(encoders.len());
    for &encoder in &encoders {
        let out = out_sides.remove(&encoder).expect("side was initialized");
        let in_ = in_sides.remove(&encoder).expect("side was initialized");
        if out.is_empty() || in_.is_empty() {
            return Err(RepresentError::InvalidStructure {
                detail: format!(
                    "encoder vertex {} lacks an {} side",
                    encoder.get(),
                    if out.is_empty() { "output" } else { "input" }
                ),
            });
        }
        arcs.push((out, in_));
    }
    let hypergraph = OrientedHypergraph::build(originals.len() as u32, arcs).map_err(|e| {
        RepresentError::InvalidStructure {
            detail: e.to_string(),
        }
    })?;
    Ok(OrientedReconstruction {
        hypergraph,
        original_ids: originals,
        encoder_ids: encoders,
    })
}

/// Anchors recovered from degree bounds, plus the components the bounds
/// could not settle (smallest vertex each).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InferredAnchors {
    pub anchors: AnchorHints,
    pub unresolved: Vec<VertexId>,
}

/// A vertex with degree below `min_card` or above `max_card` cannot encode
/// a hyperedge/hyperarc, so it must be original. The bounds give sufficient
/// conditions only; components where every degree fits inside them stay
/// unresolved rather than guessed. Requires `2 ≤ min_card ≤ max_card`.
fn infer(
    components: &[Component],
    degree: impl Fn(VertexId) -> u32,
    min_card: usize,
    max_card: usize,
) -> InferredAnchors {
    assert!(
        2 <= min_card && min_card <= max_card,
        "cardinality bounds must satisfy 2 <= min <= max"
    );
    let mut hints = Vec::new();
    let mut unresolved = Vec::new();
    for component in components {
        let anchor = component.vertices.iter().find(|&v| {
            let d = degree(v) as usize;
            d < min_card || d > max_card
        });
        match anchor {
            Some(v) => hints.push(AnchorHint::new(v, VertexRole::Original)),
            None => unresolved.push(component.vertices.as_slice()[0]),
        }
    }
    InferredAnchors {
        anchors: AnchorHints::new(hints),
        unresolved,
    }
}

pub fn infer_anchors_unoriented(
    g: &UnorientedNormalGraph,
    min_card: usize,
    max_card: usize,
) -> InferredAnchors {
    infer(
        &connected_components_unoriented(g),
        |v| g.degree(v),
        min_card,
        max_card,
    )
}

pub fn infer_anchors_oriented(
    g: &OrientedNormalGraph,
    min_card: usize,
    max_card: usize,
) -> InferredAnchors {
    infer(
        &connected_components_oriented(g),
        |v| g.degree(v),
        min_card,
        max_card,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(id: u32) -> VertexId {
        VertexId::new(id)
    }

    fn paper_unoriented() -> UnorientedHypergraph {
        UnorientedHypergraph::build(8, [vec![1, 2, 5], vec![2, 3, 7, 8], vec![6, 7]]).unwrap()
    }

    fn paper_oriented() -> OrientedHypergraph {
        OrientedHypergraph::build(
            8,
            [
                (vec![1, 2], vec![5]),
                (vec![3], vec![2, 7, 8]),
                (vec![6], vec![7]),
            ],
        )
        .unwrap()
    }

    /// Four triples on six vertices whose expansion also reads as the
    /// complete pair hypergraph on four vertices.
    fn colliding_triples() -> UnorientedHypergraph {
        UnorientedHypergraph::build(
            6,
            [vec![1, 2, 3], vec![1, 4, 5], vec![2, 4, 6], vec![3, 5, 6]],
        )
        .unwrap()
    }

    #[test]
    fn unoriented_expansion_matches_the_printed_edges() {
        let x = to_bipartite_unoriented(&paper_unoriented());
        assert_eq!(x.graph().vertex_count(), 11);
        assert_eq!(x.original_count(), 8);
        assert_eq!(x.encoder_count(), 3);
        let expected = [
            (1, 9),
            (2, 9),
            (5, 9),
            (2, 10),
            (3, 10),
            (7, 10),
            (8, 10),
            (6, 11),
            (7, 11),
        ];
        let actual: Vec<(u32, u32)> = x
            .graph()
            .edges()
            .iter()
            .map(|e| (e.lo().get(), e.hi().get()))
            .collect();
        assert_eq!(actual, expected);
        // Encoder degrees are the cardinalities; vertex 4 stays isolated.
        assert_eq!(x.graph().degree(v(9)), 3);
        assert_eq!(x.graph().degree(v(10)), 4);
        assert_eq!(x.graph().degree(v(11)), 2);
        assert_eq!(x.graph().degree(v(4)), 0);
    }

    #[test]
    fn oriented_expansion_matches_the_printed_arcs() {
        let x = to_bipartite_oriented(&paper_oriented());
        let expected = [
            (1, 9),
            (2, 9),
            (9, 5),
            (3, 10),
            (10, 2),
            (10, 7),
            (10, 8),
            (6, 11),
            (11, 7),
        ];
        let actual: Vec<(u32, u32)> = x
            .graph()
            .arcs()
            .iter()
            .map(|a| (a.tail().get(), a.head().get()))
            .collect();
        assert_eq!(actual, expected);
    }

    #[test]
    fn expansions_are_bipartite_with_true_roles_anchored() {
        let x = to_bipartite_unoriented(&paper_unoriented());
        for component in connected_components_unoriented(x.graph()) {
            assert!(component.bipartition.is_some());
        }
        // Components: {4} alone and the rest; both anchored as originals.
        assert_eq!(
            x.anchors().hints(),
            [
                AnchorHint::new(v(1), VertexRole::Original),
                AnchorHint::new(v(4), VertexRole::Original),
            ]
        );
    }

    #[test]
    fn an_edgeless_hypergraph_expands_to_isolated_vertices() {
        let h = UnorientedHypergraph::build(4, Vec::<Vec<u32>>::new()).unwrap();
        let x = to_bipartite_unoriented(&h);
        assert_eq!(x.graph().vertex_count(), 4);
        assert_eq!(x.graph().edge_count(), 0);
        assert_eq!(x.encoder_count(), 0);
        // Reconstruction needs no hints: singletons are originals.
        let back = from_bipartite_unoriented(x.graph(), &AnchorHints::default()).unwrap();
        assert_eq!(back.hypergraph, h);
    }

    #[test]
    fn ground_truth_hints_invert_the_expansion_exactly() {
        let h = paper_unoriented();
        let x = to_bipartite_unoriented(&h);
        let back = from_bipartite_unoriented(x.graph(), x.anchors()).unwrap();
        assert_eq!(back.hypergraph, h);
        assert_eq!(back.original_ids, (1..=8).map(v).collect::<Vec<_>>());
        assert_eq!(back.encoder_ids, (9..=11).map(v).collect::<Vec<_>>());

        let h = paper_oriented();
        let x = to_bipartite_oriented(&h);
        let back = from_bipartite_oriented(x.graph(), x.anchors()).unwrap();
        assert_eq!(back.hypergraph, h);
    }

    #[test]
    fn the_colliding_expansion_reconstructs_both_ways() {
        let triples = colliding_triples();
        let x = to_bipartite_unoriented(&triples);

        let as_original = AnchorHints::new(vec![AnchorHint::new(v(1), VertexRole::Original)]);
        let back = from_bipartite_unoriented(x.graph(), &as_original).unwrap();
        assert_eq!(back.hypergraph, triples);

        // Read the other way around, the same graph is the complete pair
        // hypergraph on the four former encoders.
        let as_encoder = AnchorHints::new(vec![AnchorHint::new(v(1), VertexRole::Encoder)]);
        let back = from_bipartite_unoriented(x.graph(), &as_encoder).unwrap();
        let pairs = UnorientedHypergraph::build(
            4,
            [
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4],
            ],
        )
        .unwrap();
        assert_eq!(back.hypergraph, pairs);
        assert_eq!(back.original_ids, (7..=10).map(v).collect::<Vec<_>>());
    }

    #[test]
    fn the_two_colliding_hypergraphs_expand_to_the_same_graph_up_to_the_swap() {
        // Mapping original i ↦ 6 + i and encoder 4 + q ↦ q carries the pair
        // hypergraph's expansion onto the triple hypergraph's expansion.
        let triples = to_bipartite_unoriented(&colliding_triples());
        let pairs = UnorientedHypergraph::build(
            4,
            [
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4],
            ],
        )
        .unwrap();
        let pairs_x = to_bipartite_unoriented(&pairs);
        let swap = |id: u32| if id <= 4 { id + 6 } else { id - 4 };
        let mut relabeled: Vec<(u32, u32)> = pairs_x
            .graph()
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = (swap(e.lo().get()), swap(e.hi().get()));
                (a.min(b), a.max(b))
            })
            .collect();
        relabeled.sort();
        let mut expected: Vec<(u32, u32)> = triples
            .graph()
            .edges()
            .iter()
            .map(|e| (e.lo().get(), e.hi().get()))
            .collect();
        expected.sort();
        assert_eq!(relabeled, expected);
    }

    #[test]
    fn missing_hints_and_odd_cycles_are_rejected() {
        let triangle = UnorientedNormalGraph::build(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let hint = AnchorHints::new(vec![AnchorHint::new(v(1), VertexRole::Original)]);
        assert_eq!(
            from_bipartite_unoriented(&triangle, &hint),
            Err(RepresentError::NotBipartite { component: 1 })
        );

        let two_paths = UnorientedNormalGraph::build(6, [(1, 2), (2, 3), (4, 5), (5, 6)]).unwrap();
        assert_eq!(
            from_bipartite_unoriented(&two_paths, &hint),
            Err(RepresentError::MissingHint { component: 4 })
        );
    }

    #[test]
    fn undersized_encoders_are_rejected() {
        let path = UnorientedNormalGraph::build(3, [(1, 2), (2, 3)]).unwrap();
        // Classes {1,3} and {2}: calling 1 an encoder leaves it one neighbor.
        let hint = AnchorHints::new(vec![AnchorHint::new(v(1), VertexRole::Encoder)]);
        assert!(matches!(
            from_bipartite_unoriented(&path, &hint),
            Err(RepresentError::InvalidStructure { .. })
        ));

        // An isolated vertex cannot be an encoder either.
        let lonely = UnorientedNormalGraph::build(1, Vec::<(u32, u32)>::new()).unwrap();
        assert!(matches!(
            from_bipartite_unoriented(&lonely, &hint),
            Err(RepresentError::InvalidStructure { .. })
        ));
    }

    #[test]
    fn oriented_encoders_need_both_sides() {
        // Encoder 3 has in-arcs only: no input side can be recovered.
        let g = OrientedNormalGraph::build(3, [(1, 3), (2, 3)]).unwrap();
        let hint = AnchorHints::new(vec![AnchorHint::new(v(3), VertexRole::Encoder)]);
        assert!(matches!(
            from_bipartite_oriented(&g, &hint),
            Err(RepresentError::InvalidStructure { .. })
        ));
    }

    #[test]
    fn degree_bounds_anchor_the_colliding_expansion() {
        let triples = colliding_triples();
        let x = to_bipartite_unoriented(&triples);
        // All cardinalities are 3; originals have degree 2 < 3.
        let inferred = infer_anchors_unoriented(x.graph(), 3, 3);
        assert!(inferred.unresolved.is_empty());
        assert_eq!(
            inferred.anchors.hints(),
            [AnchorHint::new(v(1), VertexRole::Original)]
        );
        let back = from_bipartite_unoriented(x.graph(), &inferred.anchors).unwrap();
        assert_eq!(back.hypergraph, triples);

        // Bounds wide enough to cover every degree settle nothing.
        let inferred = infer_anchors_unoriented(x.graph(), 2, 3);
        assert_eq!(inferred.anchors.hints(), []);
        assert_eq!(inferred.unresolved, [v(1)]);
    }

    #[test]
    fn degree_bounds_anchor_a_single_full_hyperedge() {
        let h = UnorientedHypergraph::build(4, [vec![1, 2, 3, 4]]).unwrap();
        let x = to_bipartite_unoriented(&h);
        // Originals have degree 1 < 2 regardless of the upper bound.
        let inferred = infer_anchors_unoriented(x.graph(), 2, 3);
        assert_eq!(
            inferred.anchors.hints(),
            [AnchorHint::new(v(1), VertexRole::Original)]
        );
        let back = from_bipartite_unoriented(x.graph(), &inferred.anchors).unwrap();
        assert_eq!(back.hypergraph, h);
    }
}
