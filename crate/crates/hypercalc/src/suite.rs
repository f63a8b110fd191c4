//! Seeded property-suite runner. Each suite replays the laws the library
//! is built on against random instances; reports are deterministic for a
//! given seed and include the fixed regression fixtures (the worked
//! tensors, the collision counterexamples, the printed incidence matrices)
//! regardless of the trial count.

use hypercalc_algebraic::{
    decode_tensor_oriented, encode_tensor_oriented, entry_value, incidence_matrix_oriented,
    incidence_matrix_unoriented, index_count, verify_decode_oriented, AlgebraicError,
    DecodeStrategy, EntryMode, Rational,
};
use hypercalc_core::{
    connected_components_oriented, connected_components_unoriented, count_feasible,
    FeasibleKind, OrientedHypergraph, OrientedNormalGraph, UnorientedHypergraph, VertexId,
};
use hypercalc_operators::{
    graph_arc_adjoint, graph_arc_divergence, graph_arc_gradient, graph_arc_laplacian,
    graph_arc_p_laplacian, graph_vertex_adjoint, graph_vertex_divergence, graph_vertex_gradient,
    graph_vertex_laplacian, graph_vertex_p_laplacian, hyperarc_adjoint, hyperarc_divergence,
    hyperarc_gradient, hyperarc_laplacian, hyperarc_p_laplacian, jost_hyperarc_p_laplacian,
    jost_vertex_p_laplacian, signed_power, vertex_adjoint, vertex_divergence, vertex_gradient,
    vertex_laplacian, vertex_p_laplacian, HyperarcAdjointMode, HyperarcDegreeMode, Method,
    OperatorConfig, Preset, VertexAdjointMode, VertexCardinalityMode,
};
use hypercalc_represent::{
    clique_edge_count_oriented, clique_edge_count_unoriented, from_bipartite_oriented,
    from_bipartite_unoriented, to_bipartite_oriented, to_bipartite_unoriented,
    to_clique_oriented, to_clique_unoriented, VertexRole,
};
use hypercalc_spaces::{
    hyperarc_inner_product, vertex_inner_product, HyperarcFunction, VertexFunction,
    WeightAssignment,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::{write_hypergraph_oriented, write_weights, WeightsDocument};
use crate::random::{draw_hyperarc_function, draw_instance, draw_vertex_function, draw_weights};

const P_VALUES: [f64; 4] = [1.5, 2.0, 2.5, 3.0];

/// One law's verdict: either it held on every trial and fixture, or the
/// first counterexample (in sub-seed order) is included for replay.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyOutcome {
    pub property: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Deterministic record of one suite run: same seed and trial count, same
/// bytes out of [`PropertyReport::render`].
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub suite: String,
    pub seed: u64,
    pub trials: u32,
    pub outcomes: Vec<PropertyOutcome>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    /// Stable text form: header, one `pass`/`fail` line per property (a
    /// failing property is followed by its indented counterexample), and a
    /// final `result` line.
    pub fn render(&self) -> String {
        let mut out = format!(
            "suite {}\nseed {}\ntrials {}\n",
            self.suite, self.seed, self.trials
        );
        for outcome in &self.outcomes {
            out.push_str(if outcome.passed { "pass " } else { "fail " });
            out.push_str(&outcome.property);
            out.push('\n');
            if let Some(witness) = &outcome.counterexample {
                out.push_str("counterexample\n");
                for line in witness.lines() {
                    out.push_str("  ");
                    out.push_str(line);
                    out.push('\n');
                }
            }
        }
        out.push_str(&format!(
            "result {} ({} properties)\n",
            if self.all_passed() { "pass" } else { "fail" },
            self.outcomes.len()
        ));
        out
    }
}

/// The named sub-suites. `All` runs every one of them, including the two
/// (`Counting`, `Gradients`) that have no dedicated command-line selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Duality,
    Composition,
    Reduction,
    Presets,
    Tensor,
    Representation,
    Counting,
    Gradients,
    All,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Duality => "duality",
            SuiteKind::Composition => "composition",
            SuiteKind::Reduction => "reduction",
            SuiteKind::Presets => "presets",
            SuiteKind::Tensor => "tensor",
            SuiteKind::Representation => "representation",
            SuiteKind::Counting => "counting",
            SuiteKind::Gradients => "gradients",
            SuiteKind::All => "all",
        }
    }
}

/// Runs one suite. Trials derive independent sub-seeds from the master
/// seed; the report lists trials in sorted sub-seed order, so assembly does
/// not depend on evaluation order.
pub fn run_suite(kind: SuiteKind, seed: u64, trials: u32) -> PropertyReport {
    let mut runner = Runner::new(kind, seed, trials);
    match kind {
        SuiteKind::Duality => suite_duality(&mut runner),
        SuiteKind::Composition => suite_composition(&mut runner),
        SuiteKind::Reduction => suite_reduction(&mut runner),
        SuiteKind::Presets => suite_presets(&mut runner),
        SuiteKind::Tensor => suite_tensor(&mut runner),
        SuiteKind::Representation => suite_representation(&mut runner),
        SuiteKind::Counting => suite_counting(&mut runner),
        SuiteKind::Gradients => suite_gradients(&mut runner),
        SuiteKind::All => {
            suite_duality(&mut runner);
            suite_composition(&mut runner);
            suite_reduction(&mut runner);
            suite_presets(&mut runner);
            suite_tensor(&mut runner);
            suite_representation(&mut runner);
            suite_counting(&mut runner);
            suite_gradients(&mut runner);
        }
    }
    runner.finish()
}

/// The full suite: every law across every module.
pub fn property_suite(seed: u64, trials: u32) -> PropertyReport {
    run_suite(SuiteKind::All, seed, trials)
}

// -------------------------------------------------------------- machinery --

struct Runner {
    kind: SuiteKind,
    seed: u64,
    trials: u32,
    sub_seeds: Vec<u64>,
    outcomes: Vec<PropertyOutcome>,
}

impl Runner {
    fn new(kind: SuiteKind, seed: u64, trials: u32) -> Runner {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sub_seeds: Vec<u64> = (0..trials).map(|_| rng.random()).collect();
        sub_seeds.sort_unstable();
        sub_seeds.dedup();
        Runner {
            kind,
            seed,
            trials,
            sub_seeds,
            outcomes: Vec::new(),
        }
    }

    /// Law checked once per trial; the first failing sub-seed wins.
    fn per_trial(&mut self, property: &str, check: impl Fn(u64) -> Result<(), String>) {
        let mut counterexample = None;
        for &sub_seed in &self.sub_seeds {
            if let Err(witness) = check(sub_seed) {
                counterexample = Some(format!("sub-seed {sub_seed}\n{witness}"));
                break;
            }
        }
        self.outcomes.push(PropertyOutcome {
            property: property.to_string(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    /// Fixed regression case, always run regardless of the trial count.
    fn fixture(&mut self, property: &str, check: impl FnOnce() -> Result<(), String>) {
        let counterexample = check().err();
        self.outcomes.push(PropertyOutcome {
            property: property.to_string(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    fn finish(self) -> PropertyReport {
        PropertyReport {
            suite: self.kind.name().to_string(),
            seed: self.seed,
            trials: self.trials,
            outcomes: self.outcomes,
        }
    }
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= 1e-12 + rel * a.abs().max(b.abs())
}

fn all_close(got: &[f64], want: &[f64], rel: f64) -> Result<(), String> {
    if got.len() != want.len() {
        return Err(format!("length mismatch: {} vs {}", got.len(), want.len()));
    }
    for (i, (&g, &w)) in got.iter().zip(want).enumerate() {
        if !close(g, w, rel) {
            return Err(format!("index {}: {g} vs {w} (tolerance {rel})", i + 1));
        }
    }
    Ok(())
}

fn fail(err: impl std::fmt::Display) -> String {
    format!("operator evaluation failed: {err}")
}

/// A random weighted instance with one function of each kind per side of
/// the dualities.
struct OperatorInstance {
    h: OrientedHypergraph,
    w: WeightAssignment,
    f: VertexFunction,
    big_f: HyperarcFunction,
    big_g: HyperarcFunction,
}

fn draw_operator_instance<R: Rng>(rng: &mut R) -> OperatorInstance {
    let h = draw_instance(rng, 10, 15, 5).expect("generator bounds are feasible");
    let (n, m) = (h.vertex_count(), h.hyperarc_count());
    let w = draw_weights(rng, n, m);
    OperatorInstance {
        w,
        f: draw_vertex_function(rng, n),
        big_f: draw_hyperarc_function(rng, m),
        big_g: draw_hyperarc_function(rng, m),
        h,
    }
}

fn draw_exponents<R: Rng>(rng: &mut R) -> OperatorConfig {
    OperatorConfig {
        alpha: rng.random_range(-1.0..=1.0),
        beta: rng.random_range(-1.0..=1.0),
        gamma: rng.random_range(-1.0..=1.0),
        epsilon: rng.random_range(-1.0..=1.0),
        eta: rng.random_range(-1.0..=1.0),
        zeta: rng.random_range(-1.0..=1.0),
        theta: rng.random_range(-1.0..=1.0),
        ..OperatorConfig::default()
    }
}

fn draw_any_mode_config<R: Rng>(rng: &mut R) -> OperatorConfig {
    let mut cfg = draw_exponents(rng);
    cfg.vertex_cardinality_mode = if rng.random() {
        VertexCardinalityMode::Reciprocal
    } else {
        VertexCardinalityMode::Unit
    };
    cfg.vertex_adjoint_mode = if rng.random() {
        VertexAdjointMode::Mirror
    } else {
        VertexAdjointMode::NegatedTotalDegree
    };
    cfg.hyperarc_degree_mode = if rng.random() {
        HyperarcDegreeMode::ReciprocalInOut
    } else {
        HyperarcDegreeMode::Unit
    };
    cfg.hyperarc_adjoint_mode = if rng.random() {
        HyperarcAdjointMode::Mirror
    } else {
        HyperarcAdjointMode::NegatedTotalDegree
    };
    cfg
}

fn describe_config(cfg: &OperatorConfig) -> String {
    format!(
        "exponents alpha={} beta={} gamma={} epsilon={} eta={} zeta={} theta={}\nmodes {:?} {:?} {:?} {:?}",
        cfg.alpha,
        cfg.beta,
        cfg.gamma,
        cfg.epsilon,
        cfg.eta,
        cfg.zeta,
        cfg.theta,
        cfg.vertex_cardinality_mode,
        cfg.vertex_adjoint_mode,
        cfg.hyperarc_degree_mode,
        cfg.hyperarc_adjoint_mode
    )
}

fn witness(inst: &OperatorInstance, cfg: &OperatorConfig, note: &str) -> String {
    format!(
        "{}{}{}",
        write_hypergraph_oriented(&inst.h),
        write_weights(&WeightsDocument::from_assignment(&inst.w)),
        format!("{}\n{}\n", describe_config(cfg), note)
    )
}

// ----------------------------------------------------------------- suites --

/// ⟨G, ∇_v f⟩ = ⟨f, ∇*_v G⟩ and ⟨f, ∇_a G⟩ = ⟨G, ∇*_a f⟩ under Mirror
/// adjoints, to relative 1e-9.
fn suite_duality(r: &mut Runner) {
    r.per_trial("vertex gradient and adjoint are inner-product duals", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let inst = draw_operator_instance(&mut rng);
        let cfg = draw_exponents(&mut rng);
        let grad = vertex_gradient(&inst.h, &inst.w, &cfg, &inst.f).map_err(fail)?;
        let adj = vertex_adjoint(&inst.h, &inst.w, &cfg, &inst.big_g).map_err(fail)?;
        let lhs = hyperarc_inner_product(&inst.big_g, &grad, &inst.w, cfg.beta).map_err(fail)?;
        let rhs = vertex_inner_product(&inst.f, &adj, &inst.w, cfg.alpha).map_err(fail)?;
        if close(lhs, rhs, 1e-9) {
            Ok(())
        } else {
            Err(witness(&inst, &cfg, &format!("<G, grad f> = {lhs} but <f, adj G> = {rhs}")))
        }
    });

    r.per_trial("hyperarc gradient and adjoint are inner-product duals", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let inst = draw_operator_instance(&mut rng);
        let cfg = draw_exponents(&mut rng);
        let grad = hyperarc_gradient(&inst.h, &inst.w, &cfg, &inst.big_g).map_err(fail)?;
        let adj = hyperarc_adjoint(&inst.h, &inst.w, &cfg, &inst.f).map_err(fail)?;
        let lhs = vertex_inner_product(&inst.f, &grad, &inst.w, cfg.alpha).map_err(fail)?;
        let rhs = hyperarc_inner_product(&inst.big_g, &adj, &inst.w, cfg.beta).map_err(fail)?;
        if close(lhs, rhs, 1e-9) {
            Ok(())
        } else {
            Err(witness(&inst, &cfg, &format!("<f, grad G> = {lhs} but <G, adj f> = {rhs}")))
        }
    });
}

/// Δ = div∘∇ and Δ_p = div(φ_p(∇)) in every mode combination; the explicit
/// closed forms agree in the default modes; p = 2 collapses to the
/// Laplacian.
fn suite_composition(r: &mut Runner) {
    r.per_trial("laplacians compose divergence with gradient", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let inst = draw_operator_instance(&mut rng);
        let cfg = draw_any_mode_config(&mut rng);

        let grad = vertex_gradient(&inst.h, &inst.w, &cfg, &inst.f).map_err(fail)?;
        let composed = vertex_divergence(&inst.h, &inst.w, &cfg, &grad).map_err(fail)?;
        let lap = vertex_laplacian(&inst.h, &inst.w, &cfg, &inst.f, Method::Composed)
            .map_err(fail)?;
        all_close(lap.values(), composed.values(), 1e-9)
            .map_err(|e| witness(&inst, &cfg, &format!("vertex laplacian: {e}")))?;

        let grad = hyperarc_gradient(&inst.h, &inst.w, &cfg, &inst.big_f).map_err(fail)?;
        let composed = hyperarc_divergence(&inst.h, &inst.w, &cfg, &grad).map_err(fail)?;
        let lap = hyperarc_laplacian(&inst.h, &inst.w, &cfg, &inst.big_f, Method::Composed)
            .map_err(fail)?;
        all_close(lap.values(), composed.values(), 1e-9)
            .map_err(|e| witness(&inst, &cfg, &format!("hyperarc laplacian: {e}")))
    });

    r.per_trial("p-laplacians compose divergence with the signed-power gradient", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let inst = draw_operator_instance(&mut rng);
        let cfg = draw_any_mode_config(&mut rng);
        for p in P_VALUES {
            let grad = vertex_gradient(&inst.h, &inst.w, &cfg, &inst.f).map_err(fail)?;
            let powered = HyperarcFunction::new(
                grad.values().iter().map(|&x| signed_power(x, p)).collect(),
            )
            .map_err(fail)?;
            let composed = vertex_divergence(&inst.h, &inst.w, &cfg, &powered).map_err(fail)?;
            let plap = vertex_p_laplacian(&inst.h, &inst.w, &cfg, &inst.f, p, Method::Composed)
                .map_err(fail)?;
            all_close(plap.values(), composed.values(), 1e-9)
                .map_err(|e| witness(&inst, &cfg, &format!("vertex p-laplacian at p={p}: {e}")))?;

            let grad = hyperarc_gradient(&inst.h, &inst.w, &cfg, &inst.big_f).map_err(fail)?;
            let powered = VertexFunction::new(
                grad.values().iter().map(|&x| signed_power(x, p)).collect(),
            )
            .map_err(fail)?;
            let composed = hyperarc_divergence(&inst.h, &inst.w, &cfg, &powered).map_err(fail)?;
            let plap =
                hyperarc_p_laplacian(&inst.h, &inst.w, &cfg, &inst.big_f, p, Method::Composed)
                    .map_err(fail)?;
            all_close(plap.values(), composed.values(), 1e-9).map_err(|e| {
                witness(&inst, &cfg, &format!("hyperarc p-laplacian at p={p}: {e}"))
            })?;
        }
        Ok(())
    });

    r.per_trial("explicit closed forms agree with composition in default modes", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let inst = draw_operator_instance(&mut rng);
        let cfg = draw_exponents(&mut rng);
        for method in [Method::Composed, Method::Explicit] {
            let lap = vertex_laplacian(&inst.h, &inst.w, &cfg, &inst.f, method).map_err(fail)?;
            let lap_a = hyperarc_laplacian(&inst.h, &inst.w, &cfg, &inst.big_f, method)
                .map_err(fail)?;
            if method == Method::Composed {
                continue;
            }
            let composed =
                vertex_laplacian(&inst.h, &inst.w, &cfg, &inst.f, Method::Composed)
                    .map_err(fail)?;
            all_close(lap.values(), composed.values(), 1e-9)
                .map_err(|e| witness(&inst, &cfg, &format!("vertex explicit form: {e}")))?;
            let composed_a =
                hyperarc_laplacian(&inst.h, &inst.w, &cfg, &inst.big_f, Method::Composed)
                    .map_err(fail)?;
            all_close(lap_a.values(), composed_a.values(), 1e-9)
                .map_err(|e| witness(&inst, &cfg, &format!("hyperarc explicit form: {e}")))?;
        }
        for p in P_VALUES {
            let explicit =
                vertex_p_laplacian(&inst.h, &inst.w, &cfg, &inst.f, p, Method::Explicit)
                    .map_err(fail)?;
            let composed =
                vertex_p_laplacian(&inst.h, &inst.w, &cfg, &inst.f, p, Method::Composed)
                    .map_err(fail)?;
            all_close(explicit.values(), composed.values(), 1e-9).map_err(|e| {
                witness(&inst, &cfg, &format!("vertex explicit p-form at p={p}: {e}"))
            })?;
            let explicit =
                hyperarc_p_laplacian(&inst.h, &inst.w, &cfg, &inst.big_f, p, Method::Explicit)
                    .map_err(fail)?;
            let composed =
                hyperarc_p_laplacian(&inst.h, &inst.w, &cfg, &inst.big_f, p, Method::Composed)
                    .map_err(fail)?;
            all_close(explicit.values(), composed.values(), 1e-9).map_err(|e| {
                witness(&inst, &cfg, &format!("hyperarc explicit p-form at p={p}: {e}"))
            })?;
        }
        Ok(())
    });

    r.per_trial("the 2-laplacian is the laplacian", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let inst = draw_operator_instance(&mut rng);
        let cfg = draw_any_mode_config(&mut rng);
        let plap = vertex_p_laplacian(&inst.h, &inst.w, &cfg, &inst.f, 2.0, Method::Composed)
            .map_err(fail)?;
        let lap =
            vertex_laplacian(&inst.h, &inst.w, &cfg, &inst.f, Method::Composed).map_err(fail)?;
        all_close(plap.values(), lap.values(), 1e-12)
            .map_err(|e| witness(&inst, &cfg, &format!("vertex p=2 collapse: {e}")))?;
        let plap =
            hyperarc_p_laplacian(&inst.h, &inst.w, &cfg, &inst.big_f, 2.0, Method::Composed)
                .map_err(fail)?;
        let lap = hyperarc_laplacian(&inst.h, &inst.w, &cfg, &inst.big_f, Method::Composed)
            .map_err(fail)?;
        all_close(plap.values(), lap.values(), 1e-12)
            .map_err(|e| witness(&inst, &cfg, &format!("hyperarc p=2 collapse: {e}")))
    });
}

/// A graph with one random each of: arcs, weights, functions.
fn draw_graph_instance<R: Rng>(
    rng: &mut R,
) -> (OrientedNormalGraph, WeightAssignment, VertexFunction, HyperarcFunction) {
    let n: u32 = rng.random_range(2..=8);
    let target = rng.random_range(1..=12usize);
    let mut seen = std::collections::HashSet::new();
    let mut arcs = Vec::new();
    let mut misses = 0;
    while arcs.len() < target && misses < 50 {
        let t = rng.random_range(1..=n);
        let h = rng.random_range(1..=n);
        if t != h && seen.insert((t, h)) {
            arcs.push((t, h));
        } else {
            misses += 1;
        }
    }
    if arcs.is_empty() {
        arcs.push((1, 2)); // n ≥ 2, so this arc always exists
    }
    let g = OrientedNormalGraph::build(n, arcs).expect("sampled arcs are proper and distinct");
    let w = draw_weights(rng, n, g.arc_count());
    let f = draw_vertex_function(rng, n);
    let big_f = draw_hyperarc_function(rng, g.arc_count());
    (g, w, f, big_f)
}

/// On embedded normal graphs every hypergraph operator matches the direct
/// graph reference formula to 1e-9 (gradient/adjoint/divergence in every
/// mode, Laplacian forms in the default modes).
fn suite_reduction(r: &mut Runner) {
    r.per_trial("embedded graphs reduce to the graph reference formulas", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let (g, w, f, big_f) = draw_graph_instance(&mut rng);
        let cfg = draw_any_mode_config(&mut rng);
        let default_cfg = draw_exponents(&mut rng);
        let h = g.as_hypergraph();
        let note = |name: &str, e: String| {
            format!("graph with {} arcs: {name}: {e}", g.arc_count())
        };

        let pairs: [(&str, Vec<f64>, Vec<f64>); 6] = [
            (
                "vertex gradient",
                vertex_gradient(&h, &w, &cfg, &f).map_err(fail)?.values().to_vec(),
                graph_vertex_gradient(&g, &w, &cfg, &f).map_err(fail)?.values().to_vec(),
            ),
            (
                "vertex adjoint",
                vertex_adjoint(&h, &w, &cfg, &big_f).map_err(fail)?.values().to_vec(),
                graph_vertex_adjoint(&g, &w, &cfg, &big_f).map_err(fail)?.values().to_vec(),
            ),
            (
                "vertex divergence",
                vertex_divergence(&h, &w, &cfg, &big_f).map_err(fail)?.values().to_vec(),
                graph_vertex_divergence(&g, &w, &cfg, &big_f).map_err(fail)?.values().to_vec(),
            ),
            (
                "hyperarc gradient",
                hyperarc_gradient(&h, &w, &cfg, &big_f).map_err(fail)?.values().to_vec(),
                graph_arc_gradient(&g, &w, &cfg, &big_f).map_err(fail)?.values().to_vec(),
            ),
            (
                "hyperarc adjoint",
                hyperarc_adjoint(&h, &w, &cfg, &f).map_err(fail)?.values().to_vec(),
                graph_arc_adjoint(&g, &w, &cfg, &f).map_err(fail)?.values().to_vec(),
            ),
            (
                "hyperarc divergence",
                hyperarc_divergence(&h, &w, &cfg, &f).map_err(fail)?.values().to_vec(),
                graph_arc_divergence(&g, &w, &cfg, &f).map_err(fail)?.values().to_vec(),
            ),
        ];
        for (name, got, want) in pairs {
            all_close(&got, &want, 1e-9).map_err(|e| note(name, e))?;
        }

        let lap = vertex_laplacian(&h, &w, &default_cfg, &f, Method::Composed).map_err(fail)?;
        let lap_ref = graph_vertex_laplacian(&g, &w, &default_cfg, &f).map_err(fail)?;
        all_close(lap.values(), lap_ref.values(), 1e-9)
            .map_err(|e| note("vertex laplacian", e))?;
        let lap = hyperarc_laplacian(&h, &w, &default_cfg, &big_f, Method::Composed)
            .map_err(fail)?;
        let lap_ref = graph_arc_laplacian(&g, &w, &default_cfg, &big_f).map_err(fail)?;
        all_close(lap.values(), lap_ref.values(), 1e-9)
            .map_err(|e| note("hyperarc laplacian", e))?;
        for p in P_VALUES {
            let plap = vertex_p_laplacian(&h, &w, &default_cfg, &f, p, Method::Composed)
                .map_err(fail)?;
            let plap_ref = graph_vertex_p_laplacian(&g, &w, &default_cfg, &f, p).map_err(fail)?;
            all_close(plap.values(), plap_ref.values(), 1e-9)
                .map_err(|e| note("vertex p-laplacian", e))?;
            let plap = hyperarc_p_laplacian(&h, &w, &default_cfg, &big_f, p, Method::Composed)
                .map_err(fail)?;
            let plap_ref = graph_arc_p_laplacian(&g, &w, &default_cfg, &big_f, p).map_err(fail)?;
            all_close(plap.values(), plap_ref.values(), 1e-9)
                .map_err(|e| note("hyperarc p-laplacian", e))?;
        }
        Ok(())
    });
}

/// The named parameter presets reproduce their independent reference
/// formulas (1e-10), and the graph-vertex preset gradient is exactly
/// √W_G·(f(head) − f(tail)).
fn suite_presets(r: &mut Runner) {
    r.per_trial("jost presets match the unweighted closed forms", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let inst = draw_operator_instance(&mut rng);
        let uniform = WeightAssignment::uniform(inst.h.vertex_count(), inst.h.hyperarc_count());
        for p in P_VALUES {
            let preset =
                vertex_p_laplacian(&inst.h, &uniform, &Preset::JostVertex.config(), &inst.f, p, Method::Composed)
                    .map_err(fail)?;
            let reference = jost_vertex_p_laplacian(&inst.h, &inst.f, p).map_err(fail)?;
            all_close(preset.values(), reference.values(), 1e-10).map_err(|e| {
                format!(
                    "{}vertex preset at p={p}: {e}",
                    write_hypergraph_oriented(&inst.h)
                )
            })?;
            let preset = hyperarc_p_laplacian(
                &inst.h,
                &uniform,
                &Preset::JostHyperarc.config(),
                &inst.big_f,
                p,
                Method::Composed,
            )
            .map_err(fail)?;
            let reference = jost_hyperarc_p_laplacian(&inst.h, &inst.big_f, p).map_err(fail)?;
            all_close(preset.values(), reference.values(), 1e-10).map_err(|e| {
                format!(
                    "{}hyperarc preset at p={p}: {e}",
                    write_hypergraph_oriented(&inst.h)
                )
            })?;
        }
        Ok(())
    });

    r.fixture("the graph-vertex preset gradient is the square-root difference", || {
        // Path with a branch, explicit weights chosen to exercise √W_G.
        let g = OrientedNormalGraph::build(4, [(1, 2), (2, 3), (2, 4), (4, 1)]).unwrap();
        let w = WeightAssignment::uniform(4, 4)
            .with_big_w_g(vec![4.0, 2.25, 0.25, 9.0])
            .unwrap();
        let f = VertexFunction::new(vec![1.0, -2.0, 0.5, 3.0]).unwrap();
        let h = g.as_hypergraph();
        let grad =
            vertex_gradient(&h, &w, &Preset::ElmoatazGraphVertex.config(), &f).unwrap();
        for (q, arc) in g.arcs().iter().enumerate() {
            let expected = w.big_w_g(q).sqrt() * (f.value(arc.head()) - f.value(arc.tail()));
            if grad.value(q) != expected {
                return Err(format!(
                    "arc {}: gradient {} but √W_G·difference {expected}",
                    q + 1,
                    grad.value(q)
                ));
            }
        }
        Ok(())
    });
}

/// Worked-example tensors, decode roundtrips, the collision counterexample,
/// entry shares, and the index-count law.
fn suite_tensor(r: &mut Runner) {
    r.per_trial("increased-order tensors decode back to the source", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let h = draw_instance(&mut rng, 6, 4, 4).expect("generator bounds are feasible");
        for mode in [EntryMode::Simplified, EntryMode::Full] {
            let t = encode_tensor_oriented(&h, mode, true)
                .map_err(|e| format!("encode failed: {e}"))?;
            let back = decode_tensor_oriented(&t, DecodeStrategy::Strict)
                .map_err(|e| format!("{}decode failed: {e}", write_hypergraph_oriented(&h)))?;
            if !same_hypergraph(&h, &back) {
                return Err(format!(
                    "{}decoded to a different hypergraph:\n{}",
                    write_hypergraph_oriented(&h),
                    write_hypergraph_oriented(&back)
                ));
            }
        }
        Ok(())
    });

    r.per_trial("standard-order strict decode returns the source when it completes", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let h = draw_instance(&mut rng, 6, 4, 4).expect("generator bounds are feasible");
        let t = encode_tensor_oriented(&h, EntryMode::Simplified, false)
            .map_err(|e| format!("encode failed: {e}"))?;
        match decode_tensor_oriented(&t, DecodeStrategy::Strict) {
            Ok(back) if same_hypergraph(&h, &back) => {}
            Ok(back) => {
                return Err(format!(
                    "{}strict decode invented:\n{}",
                    write_hypergraph_oriented(&h),
                    write_hypergraph_oriented(&back)
                ))
            }
            Err(AlgebraicError::AmbiguousTensor { .. }) => {}
            Err(e) => {
                return Err(format!(
                    "{}strict decode failed: {e}",
                    write_hypergraph_oriented(&h)
                ))
            }
        }
        let greedy = decode_tensor_oriented(&t, DecodeStrategy::Greedy)
            .map_err(|e| format!("greedy decode failed: {e}"))?;
        if verify_decode_oriented(&t, &greedy) {
            Ok(())
        } else {
            Err(format!(
                "{}greedy decode does not re-encode to the tensor",
                write_hypergraph_oriented(&greedy)
            ))
        }
    });

    r.fixture("the worked 6-vertex tensor has the printed entries", || {
        let h = OrientedHypergraph::build(
            6,
            [(vec![1, 2], vec![4]), (vec![3], vec![2, 6]), (vec![5], vec![6])],
        )
        .unwrap();
        let t = encode_tensor_oriented(&h, EntryMode::Simplified, false).unwrap();
        let three_halves = Rational::new(3, 2);
        let one = Rational::new(1, 1);
        let expected = [
            (vec![1u32, 2, 4], three_halves),
            (vec![2, 1, 4], three_halves),
            (vec![3, 2, 6], three_halves),
            (vec![3, 6, 2], three_halves),
            (vec![5, 5, 6], one),
            (vec![5, 6, 6], one),
        ];
        let got: Vec<(Vec<u32>, Rational)> =
            t.entries().map(|(idx, v)| (idx.to_vec(), v)).collect();
        if got == expected {
            Ok(())
        } else {
            Err(format!("entries differ: {got:?}"))
        }
    });

    r.fixture("the colliding pair shares one tensor and strict decode reports it", || {
        let pairs = OrientedHypergraph::build(
            4,
            [
                (vec![1, 2], vec![3, 4]),
                (vec![1, 3], vec![2, 4]),
                (vec![1, 4], vec![2, 3]),
                (vec![2, 3], vec![1, 4]),
                (vec![2, 4], vec![1, 3]),
                (vec![3, 4], vec![1, 2]),
            ],
        )
        .unwrap();
        let singletons = OrientedHypergraph::build(
            4,
            [
                (vec![1], vec![2, 3, 4]),
                (vec![2], vec![1, 3, 4]),
                (vec![3], vec![1, 2, 4]),
                (vec![4], vec![1, 2, 3]),
            ],
        )
        .unwrap();
        let t1 = encode_tensor_oriented(&pairs, EntryMode::Simplified, false).unwrap();
        let t2 = encode_tensor_oriented(&singletons, EntryMode::Simplified, false).unwrap();
        if t1 != t2 {
            return Err("the two encodings differ".into());
        }
        match decode_tensor_oriented(&t1, DecodeStrategy::Strict) {
            Err(AlgebraicError::AmbiguousTensor { candidates }) if !candidates.is_empty() => {}
            other => return Err(format!("expected ambiguity, got {other:?}")),
        }
        let greedy = decode_tensor_oriented(&t1, DecodeStrategy::Greedy)
            .map_err(|e| format!("greedy decode failed: {e}"))?;
        if !verify_decode_oriented(&t1, &greedy) {
            return Err("greedy decode does not verify".into());
        }
        Ok(())
    });

    r.fixture("entry shares match the closed form", || {
        let cases = [
            (2, 2, EntryMode::Full, Rational::new(1, 1)),
            (3, 3, EntryMode::Simplified, Rational::new(3, 2)),
            (2, 3, EntryMode::Full, Rational::new(1, 3)),
        ];
        for (n, order, mode, expected) in cases {
            let got = entry_value(n, order, mode).map_err(|e| e.to_string())?;
            if got != expected {
                return Err(format!("entry_value({n}, {order}, {mode:?}) = {got}"));
            }
        }
        Ok(())
    });

    r.fixture("representable index counts match exhaustive enumeration", || {
        for max_a in 2..=5usize {
            for n in [max_a - 1, max_a] {
                if n < 2 {
                    continue;
                }
                for out in 1..n {
                    let in_ = n - out;
                    let expected = single_arc_entry_count(out, in_, max_a)?;
                    let got = index_count(out, in_, max_a).map_err(|e| e.to_string())?;
                    if got != expected {
                        return Err(format!(
                            "index_count({out}, {in_}, {max_a}) = {got}, enumeration gives {expected}"
                        ));
                    }
                }
            }
        }
        Ok(())
    });

    r.per_trial("graph tensors are adjacency matrices", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let (g, ..) = draw_graph_instance(&mut rng);
        let h = g.as_hypergraph();
        let t = encode_tensor_oriented(&h, EntryMode::Full, false)
            .map_err(|e| format!("encode failed: {e}"))?;
        if t.order() != 2 {
            return Err(format!("graph tensor has order {}", t.order()));
        }
        let adjacency = hypercalc_algebraic::adjacency_matrix_oriented(&g);
        for i in g.vertices() {
            for j in g.vertices() {
                let expected = adjacency.entry(i, j) as i64;
                let got = t
                    .value(&[i.get(), j.get()])
                    .map(|v| {
                        if v == Rational::new(1, 1) {
                            1i64
                        } else {
                            i64::MAX
                        }
                    })
                    .unwrap_or(0);
                if got != expected {
                    return Err(format!(
                        "{}entry ({}, {}): tensor {got} vs adjacency {expected}",
                        crate::format::write_graph_oriented(&g),
                        i.get(),
                        j.get()
                    ));
                }
            }
        }
        Ok(())
    });
}

fn single_arc_entry_count(out: usize, in_: usize, max_a: usize) -> Result<u64, String> {
    // The arc under count lives on vertices 1..=n; when n < max_a a
    // vertex-disjoint pinning arc of cardinality max_a fixes the tensor
    // order, and disjointness lets the entries be told apart by index.
    let n = out + in_;
    let mut arcs = vec![(
        (1..=out as u32).collect::<Vec<u32>>(),
        (out as u32 + 1..=n as u32).collect::<Vec<u32>>(),
    )];
    let mut total = n as u32;
    if n < max_a {
        let lo = n as u32 + 1;
        let hi = n as u32 + max_a as u32;
        arcs.push((vec![lo], (lo + 1..=hi).collect()));
        total = hi;
    }
    let h = OrientedHypergraph::build(total, arcs).map_err(|e| e.to_string())?;
    let t = encode_tensor_oriented(&h, EntryMode::Simplified, false).map_err(|e| e.to_string())?;
    if t.order() != max_a {
        return Err(format!("pinned tensor has order {}", t.order()));
    }
    Ok(t
        .entries()
        .filter(|(idx, _)| idx.iter().all(|&i| i as usize <= n))
        .count() as u64)
}

/// Star expansions are bipartite and anchored-invertible; the printed
/// collision pairs collide; clique multiplicities count memberships.
fn suite_representation(r: &mut Runner) {
    r.per_trial("star expansions are bipartite and anchor-invertible", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let h = draw_instance(&mut rng, 8, 6, 4).expect("generator bounds are feasible");
        let x = to_bipartite_oriented(&h);
        for component in connected_components_oriented(x.graph()) {
            if component.bipartition.is_none() {
                return Err(format!(
                    "{}expansion component without a 2-coloring",
                    write_hypergraph_oriented(&h)
                ));
            }
        }
        let back = from_bipartite_oriented(x.graph(), x.anchors())
            .map_err(|e| format!("reconstruction failed: {e}"))?;
        if back.hypergraph != h {
            return Err(format!(
                "{}reconstructed differently:\n{}",
                write_hypergraph_oriented(&h),
                write_hypergraph_oriented(&back.hypergraph)
            ));
        }

        let u = to_unoriented(&h);
        let x = to_bipartite_unoriented(&u);
        for component in connected_components_unoriented(x.graph()) {
            if component.bipartition.is_none() {
                return Err("unoriented expansion without a 2-coloring".into());
            }
        }
        let back = from_bipartite_unoriented(x.graph(), x.anchors())
            .map_err(|e| format!("unoriented reconstruction failed: {e}"))?;
        if back.hypergraph != u {
            return Err("unoriented reconstruction differs".into());
        }
        Ok(())
    });

    r.per_trial("clique multiplicities count covering hyperedges", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let h = to_unoriented(&draw_instance(&mut rng, 8, 6, 4).expect("feasible"));
        let g = to_clique_unoriented(&h);
        for i in h.vertices() {
            for j in h.vertices() {
                if i >= j {
                    continue;
                }
                let covering = h
                    .hyperedges()
                    .iter()
                    .filter(|e| e.members().contains(i) && e.members().contains(j))
                    .count() as u64;
                if g.multiplicity(i, j) != covering {
                    return Err(format!(
                        "pair ({}, {}): multiplicity {} vs {} covering hyperedges",
                        i.get(),
                        j.get(),
                        g.multiplicity(i, j),
                        covering
                    ));
                }
            }
        }
        Ok(())
    });

    r.fixture("the printed star counterexample collides", || {
        let triples = UnorientedHypergraph::build(
            6,
            [vec![1, 2, 3], vec![1, 4, 5], vec![2, 4, 6], vec![3, 5, 6]],
        )
        .unwrap();
        let x = to_bipartite_unoriented(&triples);
        let original = from_bipartite_unoriented(
            x.graph(),
            &one_hint(1, VertexRole::Original),
        )
        .map_err(|e| e.to_string())?;
        if original.hypergraph != triples {
            return Err("original-role hint no longer recovers the source".into());
        }
        let flipped = from_bipartite_unoriented(x.graph(), &one_hint(1, VertexRole::Encoder))
            .map_err(|e| e.to_string())?;
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
        if flipped.hypergraph != pairs {
            return Err(format!(
                "encoder-role hint produced {:?}",
                flipped.hypergraph
            ));
        }
        Ok(())
    });

    r.fixture("the printed clique counterexample collides", || {
        let triples =
            UnorientedHypergraph::build(4, [vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]])
                .unwrap();
        let star = UnorientedHypergraph::build(
            4,
            [vec![1, 2], vec![1, 3], vec![1, 4], vec![1, 2, 3, 4]],
        )
        .unwrap();
        if triples == star {
            return Err("fixture degenerated".into());
        }
        if to_clique_unoriented(&triples) != to_clique_unoriented(&star) {
            return Err("the clique expansions no longer collide".into());
        }
        Ok(())
    });

    r.per_trial("lone expansions match the clique count formulas", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let h = draw_instance(&mut rng, 8, 4, 5).expect("feasible");
        for arc in h.hyperarcs() {
            let lone = OrientedHypergraph::build(
                h.vertex_count(),
                [(
                    arc.out_set().iter().map(|v| v.get()).collect::<Vec<_>>(),
                    arc.in_set().iter().map(|v| v.get()).collect::<Vec<_>>(),
                )],
            )
            .expect("a single existing hyperarc is valid");
            let expected =
                clique_edge_count_oriented(arc.out_set().len(), arc.in_set().len())
                    .map_err(|e| e.to_string())?;
            if to_clique_oriented(&lone).total_count() != expected {
                return Err(format!(
                    "lone hyperarc ({:?}) misses its count {expected}",
                    arc
                ));
            }
        }
        let u = to_unoriented(&h);
        for edge in u.hyperedges() {
            let lone = UnorientedHypergraph::build(
                u.vertex_count(),
                [edge.members().iter().map(|v| v.get()).collect::<Vec<u32>>()],
            )
            .expect("a single existing hyperedge is valid");
            let expected = clique_edge_count_unoriented(edge.cardinality())
                .map_err(|e| e.to_string())?;
            if to_clique_unoriented(&lone).total_count() != expected {
                return Err(format!(
                    "lone hyperedge of size {} misses its count {expected}",
                    edge.cardinality()
                ));
            }
        }
        Ok(())
    });

    r.fixture("the printed incidence matrices are reproduced", || {
        // Worked 8-vertex examples: +1 marks output sides, −1 input sides,
        // plain membership for the unoriented variant.
        let h = OrientedHypergraph::build(
            8,
            [(vec![1, 2], vec![5]), (vec![3], vec![2, 7, 8]), (vec![6], vec![7])],
        )
        .unwrap();
        let m = incidence_matrix_oriented(&h);
        let expected: [[i8; 3]; 8] = [
            [1, 0, 0],
            [1, -1, 0],
            [0, 1, 0],
            [0, 0, 0],
            [-1, 0, 0],
            [0, 0, 1],
            [0, -1, -1],
            [0, -1, 0],
        ];
        for (row, want) in expected.iter().enumerate() {
            let v = VertexId::new(row as u32 + 1);
            if m.row(v) != want.as_slice() {
                return Err(format!("oriented row {}: {:?}", row + 1, m.row(v)));
            }
        }
        let u = UnorientedHypergraph::build(8, [vec![1, 2, 5], vec![2, 3, 7, 8], vec![6, 7]])
            .unwrap();
        let m = incidence_matrix_unoriented(&u);
        let expected: [[i8; 3]; 8] = [
            [1, 0, 0],
            [1, 1, 0],
            [0, 1, 0],
            [0, 0, 0],
            [1, 0, 0],
            [0, 0, 1],
            [0, 1, 1],
            [0, 1, 0],
        ];
        for (row, want) in expected.iter().enumerate() {
            let v = VertexId::new(row as u32 + 1);
            if m.row(v) != want.as_slice() {
                return Err(format!("unoriented row {}: {:?}", row + 1, m.row(v)));
            }
        }
        Ok(())
    });
}

/// Closed-form feasibility counts match brute force and respect the n^n
/// bound.
fn suite_counting(r: &mut Runner) {
    r.fixture("feasibility counts match brute-force enumeration", || {
        for n in 2..=5u32 {
            let mut edges = 0u64;
            for mask in 1u32..(1 << n) {
                if mask.count_ones() >= 2 {
                    edges += 1;
                }
            }
            let counted = count_feasible(FeasibleKind::Hyperedges, n).map_err(|e| e.to_string())?;
            if counted.to_string() != edges.to_string() {
                return Err(format!("hyperedges({n}): {counted} vs brute force {edges}"));
            }
            let mut arcs = 0u64;
            for out in 1u32..(1 << n) {
                for in_ in 1u32..(1 << n) {
                    if out & in_ == 0 {
                        arcs += 1;
                    }
                }
            }
            let counted = count_feasible(FeasibleKind::Hyperarcs, n).map_err(|e| e.to_string())?;
            if counted.to_string() != arcs.to_string() {
                return Err(format!("hyperarcs({n}): {counted} vs brute force {arcs}"));
            }
        }
        Ok(())
    });

    r.fixture("feasibility counts respect the n^n bound", || {
        for n in 2..=12u32 {
            let bound = num_pow(n as u128, n);
            for kind in [FeasibleKind::Hyperedges, FeasibleKind::Hyperarcs] {
                let counted = count_feasible(kind, n).map_err(|e| e.to_string())?;
                let as_u128: u128 = counted
                    .to_string()
                    .parse()
                    .map_err(|_| format!("count for n={n} exceeds u128"))?;
                if as_u128 > bound {
                    return Err(format!("{kind:?} count {as_u128} exceeds {n}^{n} = {bound}"));
                }
            }
        }
        Ok(())
    });

    r.fixture("four vertices admit eleven hyperedges", || {
        let counted = count_feasible(FeasibleKind::Hyperedges, 4).map_err(|e| e.to_string())?;
        if counted.to_string() == "11" {
            Ok(())
        } else {
            Err(format!("count_feasible(hyperedges, 4) = {counted}"))
        }
    });
}

fn num_pow(base: u128, exp: u32) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

/// Constant functions have bitwise-zero gradients under compatible weights;
/// switching the orientation negates gradients.
fn suite_gradients(r: &mut Runner) {
    r.per_trial("constant functions have exactly zero gradients", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let h = draw_instance(&mut rng, 10, 15, 5).expect("feasible");
        let (n, m) = (h.vertex_count(), h.hyperarc_count());
        // Multiples of lcm(1..12) = 27720 divide exactly by every
        // cardinality and degree; power-of-two w_I keeps mantissas intact.
        let constant = 27720.0 * f64::from(rng.random_range(1u32..2000));
        let factor = [0.5, 1.0, 2.0, 4.0][rng.random_range(0..4usize)];
        let alpha = f64::from(rng.random_range(0u32..3));

        let w = WeightAssignment::uniform(n, m)
            .with_w_i(vec![factor; n as usize])
            .expect("positive weight factor");
        let cfg = OperatorConfig {
            alpha,
            gamma: rng.random_range(-1.0..=1.0),
            epsilon: rng.random_range(-1.0..=1.0),
            eta: rng.random_range(-1.0..=1.0),
            ..OperatorConfig::default()
        };
        let f = VertexFunction::constant(n, constant);
        let grad = vertex_gradient(&h, &w, &cfg, &f).map_err(fail)?;
        if let Some(bad) = grad.values().iter().find(|&&x| x != 0.0) {
            return Err(witness_plain(&h, &format!("vertex gradient value {bad} != 0")));
        }
        let lap = vertex_laplacian(&h, &w, &cfg, &f, Method::Composed).map_err(fail)?;
        if let Some(bad) = lap.values().iter().find(|&&x| x != 0.0) {
            return Err(witness_plain(&h, &format!("vertex laplacian value {bad} != 0")));
        }

        let w = WeightAssignment::uniform(n, m)
            .with_big_w_i(vec![factor; m])
            .expect("positive weight factor");
        let cfg = OperatorConfig {
            beta: alpha,
            zeta: rng.random_range(-1.0..=1.0),
            ..OperatorConfig::default()
        };
        let big_f = HyperarcFunction::constant(m, constant);
        let grad = hyperarc_gradient(&h, &w, &cfg, &big_f).map_err(fail)?;
        for v in h.vertices() {
            if h.degree_in(v) >= 1 && h.degree_out(v) >= 1 && grad.value(v) != 0.0 {
                return Err(witness_plain(
                    &h,
                    &format!("hyperarc gradient at vertex {} is {}", v.get(), grad.value(v)),
                ));
            }
        }
        Ok(())
    });

    r.per_trial("switching the orientation negates gradients", |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let inst = draw_operator_instance(&mut rng);
        let mut cfg = draw_any_mode_config(&mut rng);
        cfg.eta = cfg.epsilon;
        let switched = inst.h.switched();

        let grad = vertex_gradient(&inst.h, &inst.w, &cfg, &inst.f).map_err(fail)?;
        let grad_switched = vertex_gradient(&switched, &inst.w, &cfg, &inst.f).map_err(fail)?;
        let negated: Vec<f64> = grad_switched.values().iter().map(|&x| -x).collect();
        all_close(grad.values(), &negated, 1e-12)
            .map_err(|e| witness(&inst, &cfg, &format!("vertex antisymmetry: {e}")))?;

        let grad = hyperarc_gradient(&inst.h, &inst.w, &cfg, &inst.big_f).map_err(fail)?;
        let grad_switched =
            hyperarc_gradient(&switched, &inst.w, &cfg, &inst.big_f).map_err(fail)?;
        let negated: Vec<f64> = grad_switched.values().iter().map(|&x| -x).collect();
        all_close(grad.values(), &negated, 1e-12)
            .map_err(|e| witness(&inst, &cfg, &format!("hyperarc antisymmetry: {e}")))
    });
}

// ---------------------------------------------------------------- helpers --

fn witness_plain(h: &OrientedHypergraph, note: &str) -> String {
    format!("{}{note}\n", write_hypergraph_oriented(h))
}

fn same_hypergraph(a: &OrientedHypergraph, b: &OrientedHypergraph) -> bool {
    // Decoding returns hyperarcs in canonical sorted order; compare as sets.
    if a.vertex_count() != b.vertex_count() {
        return false;
    }
    let key = |h: &OrientedHypergraph| {
        let mut arcs: Vec<(Vec<u32>, Vec<u32>)> = h
            .hyperarcs()
            .iter()
            .map(|arc| {
                (
                    arc.out_set().iter().map(|v| v.get()).collect(),
                    arc.in_set().iter().map(|v| v.get()).collect(),
                )
            })
            .collect();
        arcs.sort();
        arcs
    };
    key(a) == key(b)
}

fn to_unoriented(h: &OrientedHypergraph) -> UnorientedHypergraph {
    // Vertex-set unions of the hyperarcs, deduplicated, as hyperedges.
    let mut seen = std::collections::HashSet::new();
    let edges: Vec<Vec<u32>> = h
        .hyperarcs()
        .iter()
        .map(|arc| {
            let mut members: Vec<u32> = arc.vertices().map(|v| v.get()).collect();
            members.sort_unstable();
            members
        })
        .filter(|members| seen.insert(members.clone()))
        .collect();
    UnorientedHypergraph::build(h.vertex_count(), edges)
        .expect("hyperarc vertex sets are valid hyperedges")
}

fn one_hint(vertex: u32, role: VertexRole) -> hypercalc_represent::AnchorHints {
    hypercalc_represent::AnchorHints::new(vec![hypercalc_represent::AnchorHint::new(
        VertexId::new(vertex),
        role,
    )])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_full_suite_passes_and_is_deterministic() {
        let a = property_suite(7, 10);
        let b = property_suite(7, 10);
        assert_eq!(a.render(), b.render());
        assert!(a.all_passed(), "\n{}", a.render());
        assert_eq!(a.suite, "all");
        assert!(a.outcomes.len() >= 15);
    }

    #[test]
    fn single_suites_run_alone() {
        for kind in [
            SuiteKind::Duality,
            SuiteKind::Composition,
            SuiteKind::Reduction,
            SuiteKind::Presets,
            SuiteKind::Tensor,
            SuiteKind::Representation,
            SuiteKind::Counting,
            SuiteKind::Gradients,
        ] {
            let report = run_suite(kind, 3, 4);
            assert!(report.all_passed(), "{}:\n{}", kind.name(), report.render());
            assert_eq!(report.suite, kind.name());
        }
    }

    #[test]
    fn reports_render_failures_with_indented_witnesses() {
        let report = PropertyReport {
            suite: "demo".into(),
            seed: 1,
            trials: 2,
            outcomes: vec![
                PropertyOutcome {
                    property: "holds".into(),
                    passed: true,
                    counterexample: None,
                },
                PropertyOutcome {
                    property: "breaks".into(),
                    passed: false,
                    counterexample: Some("sub-seed 9\nline two".into()),
                },
            ],
        };
        assert!(!report.all_passed());
        let text = report.render();
        assert_eq!(
            text,
            "suite demo\nseed 1\ntrials 2\npass holds\nfail breaks\ncounterexample\n  sub-seed 9\n  line two\nresult fail (2 properties)\n"
        );
    }
}
