//! Command-line dispatch. The binary is a thin wrapper around
//! [`cli_dispatch`], which parses an argument vector, runs one subcommand,
//! and reports through the given streams: data on stdout, diagnostics on
//! stderr, and an exit code from the fixed table —
//! 0 success, 1 validation failure, 2 parse error (file or argument),
//! 3 ambiguous tensor decode, 4 property-suite failure.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hypercalc_algebraic::{
    adjacency_matrix_oriented, adjacency_matrix_unoriented, decode_tensor_oriented,
    decode_tensor_unoriented, encode_tensor_oriented, encode_tensor_unoriented,
    incidence_matrix_oriented, incidence_matrix_unoriented, verify_decode_oriented,
    verify_decode_unoriented, AlgebraicError, DecodeStrategy, EntryMode,
};
use hypercalc_core::{OrientedNormalGraph, UnorientedNormalGraph};
use hypercalc_operators::{
    hyperarc_adjoint, hyperarc_divergence, hyperarc_gradient, hyperarc_laplacian,
    hyperarc_p_laplacian, vertex_adjoint, vertex_divergence, vertex_gradient, vertex_laplacian,
    vertex_p_laplacian, HyperarcAdjointMode, HyperarcDegreeMode, Method, OperatorConfig, Preset,
    VertexAdjointMode, VertexCardinalityMode,
};
use hypercalc_represent::{
    from_bipartite_oriented, from_bipartite_unoriented, infer_anchors_oriented,
    infer_anchors_unoriented, to_bipartite_oriented, to_bipartite_unoriented, to_clique_oriented,
    to_clique_unoriented,
};
use hypercalc_spaces::WeightAssignment;

use crate::error::IoError;
use crate::format::{
    parse_anchors, parse_function, parse_graph, parse_hypergraph, parse_tensor, parse_weights,
    write_anchors, write_graph_oriented, write_graph_unoriented, write_hyperarc_function,
    write_hypergraph_oriented, write_hypergraph_unoriented, write_multigraph, write_tensor,
    write_vertex_function, GraphDocument, HypergraphDocument,
};
use crate::suite::{run_suite, SuiteKind};

/// Parses `argv` (program name first, as handed to a process), runs the
/// selected subcommand, and returns the exit code. All output goes through
/// the two streams, so the dispatcher is testable in-process.
pub fn cli_dispatch<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests land on stdout with success;
            // genuine argument errors are parse failures.
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                2
            } else {
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    match run(cli.command) {
        Ok(output) => {
            let _ = write!(stdout, "{}", output.data);
            output.code
        }
        Err(failure) => {
            let _ = writeln!(stderr, "{}", failure.message);
            failure.code
        }
    }
}

#[derive(Parser)]
#[command(
    name = "hypercalc",
    version,
    about = "Discrete calculus on oriented and unoriented hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a hypergraph file: counts, cardinality range, degrees
    Info { file: PathBuf },
    /// Check a hypergraph file and print its canonical form
    Validate { file: PathBuf },
    /// Swap the output and input side of every hyperarc
    Switch { file: PathBuf },
    /// Print the vertex-by-hyperarc incidence matrix
    Incidence { file: PathBuf },
    /// Print the adjacency matrix of a normal graph
    Adjacency { file: PathBuf },
    /// Encode hypergraphs as adjacency tensors and decode them back
    #[command(subcommand)]
    Tensor(TensorCommand),
    /// Expand a hypergraph into a normal graph or multigraph
    #[command(subcommand)]
    Represent(RepresentCommand),
    /// Rebuild a hypergraph from a bipartite expansion and anchor roles
    Reconstruct {
        graph: PathBuf,
        /// Anchor file naming at least one vertex role per component
        #[arg(long)]
        anchors: PathBuf,
    },
    /// Infer expansion anchor roles from cardinality bounds
    Anchors {
        graph: PathBuf,
        /// Smallest hyperedge/hyperarc cardinality the source may contain
        #[arg(long)]
        min_card: usize,
        /// Largest cardinality the source may contain
        #[arg(long)]
        max_card: usize,
    },
    /// Apply a differential operator to a function file
    Op {
        /// Operator to apply
        #[arg(value_enum)]
        kind: OpKind,
        /// Oriented hypergraph file
        file: PathBuf,
        /// Input function file (vertexfn or arcfn, as the operator needs)
        #[arg(long = "fn")]
        function: PathBuf,
        /// Weights file; every omitted weight defaults to 1
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Named parameter preset
        #[arg(long, conflicts_with = "exponents")]
        preset: Option<String>,
        /// Seven comma-separated exponents: alpha,beta,gamma,epsilon,eta,zeta,theta
        #[arg(long, allow_hyphen_values = true)]
        exponents: Option<String>,
        /// Comma-separated mode overrides, e.g. vertex-adjoint=negated-total-degree
        #[arg(long)]
        modes: Option<String>,
        /// Exponent of the p-Laplacians (plap_v, plap_a)
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        /// How Laplacians are evaluated
        #[arg(long, value_enum, default_value_t = MethodArg::Composed)]
        method: MethodArg,
    },
    /// Run the seeded property suites and print the report
    Check {
        /// Which suite to run
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Random trials per property (fixed fixtures always run)
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        /// Master seed for the trial sub-seeds
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum TensorCommand {
    /// Print the adjacency tensor of a hypergraph
    Encode {
        file: PathBuf,
        /// Divide each hyperarc's unit mass over all of its index tuples
        #[arg(long)]
        full: bool,
        /// Encode two orders above the largest cardinality (oriented only)
        #[arg(long)]
        increased: bool,
    },
    /// Rebuild a hypergraph from an adjacency tensor
    Decode {
        file: PathBuf,
        /// On ambiguity, commit to maximal candidate hyperarcs
        #[arg(long)]
        greedy: bool,
        /// Re-encode the result and require it to match the input
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Subcommand)]
enum RepresentCommand {
    /// Star expansion into a bipartite normal graph
    Bipartite {
        file: PathBuf,
        /// Also write the ground-truth anchor file to this path
        #[arg(long)]
        anchors: Option<PathBuf>,
    },
    /// Clique expansion into a multigraph
    Clique { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    /// Vertex gradient: vertexfn in, arcfn out
    #[value(name = "grad_v")]
    GradV,
    /// Vertex adjoint: arcfn in, vertexfn out
    #[value(name = "adjoint_v")]
    AdjointV,
    /// Vertex divergence: arcfn in, vertexfn out
    #[value(name = "div_v")]
    DivV,
    /// Vertex Laplacian: vertexfn in, vertexfn out
    #[value(name = "lap_v")]
    LapV,
    /// Vertex p-Laplacian: vertexfn in, vertexfn out
    #[value(name = "plap_v")]
    PlapV,
    /// Hyperarc gradient: arcfn in, vertexfn out
    #[value(name = "grad_a")]
    GradA,
    /// Hyperarc adjoint: vertexfn in, arcfn out
    #[value(name = "adjoint_a")]
    AdjointA,
    /// Hyperarc divergence: vertexfn in, arcfn out
    #[value(name = "div_a")]
    DivA,
    /// Hyperarc Laplacian: arcfn in, arcfn out
    #[value(name = "lap_a")]
    LapA,
    /// Hyperarc p-Laplacian: arcfn in, arcfn out
    #[value(name = "plap_a")]
    PlapA,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Composed,
    Explicit,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Composed => Method::Composed,
            MethodArg::Explicit => Method::Explicit,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Duality,
    Composition,
    Reduction,
    Presets,
    Tensor,
    Representation,
    All,
}

impl From<SuiteArg> for SuiteKind {
    fn from(s: SuiteArg) -> SuiteKind {
        match s {
            SuiteArg::Duality => SuiteKind::Duality,
            SuiteArg::Composition => SuiteKind::Composition,
            SuiteArg::Reduction => SuiteKind::Reduction,
            SuiteArg::Presets => SuiteKind::Presets,
            SuiteArg::Tensor => SuiteKind::Tensor,
            SuiteArg::Representation => SuiteKind::Representation,
            SuiteArg::All => SuiteKind::All,
        }
    }
}

// ------------------------------------------------------------- plumbing --

struct Output {
    data: String,
    code: i32,
}

impl Output {
    fn data(data: String) -> Output {
        Output { data, code: 0 }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn validation(message: impl std::fmt::Display) -> Failure {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }

    fn args(message: impl std::fmt::Display) -> Failure {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Failure {
        Failure {
            code: match e {
                IoError::Parse { .. } => 2,
                _ => 1,
            },
            message: e.to_string(),
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

// ------------------------------------------------------------- handlers --

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Info { file } => info(&file),
        Command::Validate { file } => {
            let doc = parse_hypergraph(&read_file(&file)?)?;
            Ok(Output::data(doc.write()))
        }
        Command::Switch { file } => {
            let doc = parse_hypergraph(&read_file(&file)?)?;
            let h = doc
                .oriented()
                .ok_or_else(|| Failure::validation("switching needs an oriented hypergraph"))?;
            Ok(Output::data(write_hypergraph_oriented(&h.switched())))
        }
        Command::Incidence { file } => incidence(&file),
        Command::Adjacency { file } => adjacency(&file),
        Command::Tensor(cmd) => tensor(cmd),
        Command::Represent(cmd) => represent(cmd),
        Command::Reconstruct { graph, anchors } => reconstruct(&graph, &anchors),
        Command::Anchors {
            graph,
            min_card,
            max_card,
        } => anchors(&graph, min_card, max_card),
        Command::Op {
            kind,
            file,
            function,
            weights,
            preset,
            exponents,
            modes,
            p,
            method,
        } => op(
            kind, &file, &function, weights, preset, exponents, modes, p, method,
        ),
        Command::Check {
            suite,
            trials,
            seed,
        } => {
            let report = run_suite(suite.into(), seed, trials);
            Ok(Output {
                code: if report.all_passed() { 0 } else { 4 },
                data: report.render(),
            })
        }
    }
}

fn info(file: &Path) -> Result<Output, Failure> {
    let doc = parse_hypergraph(&read_file(file)?)?;
    let mut out = String::new();
    match &doc {
        HypergraphDocument::Oriented(h) => {
            let _ = writeln!(out, "kind oriented");
            let _ = writeln!(out, "vertices {}", h.vertex_count());
            let _ = writeln!(out, "hyperarcs {}", h.hyperarc_count());
            match h.cardinality_bounds() {
                Ok((lo, hi)) => {
                    let _ = writeln!(out, "cardinality min {lo}");
                    let _ = writeln!(out, "cardinality max {hi}");
                }
                Err(_) => {
                    let _ = writeln!(out, "cardinality none");
                }
            }
            for v in h.vertices() {
                let _ = writeln!(
                    out,
                    "degree {} total {} out {} in {}",
                    v.get(),
                    h.degree(v),
                    h.degree_out(v),
                    h.degree_in(v)
                );
            }
        }
        HypergraphDocument::Unoriented(h) => {
            let _ = writeln!(out, "kind unoriented");
            let _ = writeln!(out, "vertices {}", h.vertex_count());
            let _ = writeln!(out, "hyperedges {}", h.hyperedge_count());
            match h.cardinality_bounds() {
                Ok((lo, hi)) => {
                    let _ = writeln!(out, "cardinality min {lo}");
                    let _ = writeln!(out, "cardinality max {hi}");
                }
                Err(_) => {
                    let _ = writeln!(out, "cardinality none");
                }
            }
            for v in h.vertices() {
                let _ = writeln!(out, "degree {} total {}", v.get(), h.degree(v));
            }
        }
    }
    Ok(Output::data(out))
}

fn incidence(file: &Path) -> Result<Output, Failure> {
    let doc = parse_hypergraph(&read_file(file)?)?;
    let mut out = String::new();
    match &doc {
        HypergraphDocument::Oriented(h) => {
            let m = incidence_matrix_oriented(h);
            for v in h.vertices() {
                let _ = writeln!(out, "{}", join_ints(m.row(v)));
            }
        }
        HypergraphDocument::Unoriented(h) => {
            let m = incidence_matrix_unoriented(h);
            for v in h.vertices() {
                let _ = writeln!(out, "{}", join_ints(m.row(v)));
            }
        }
    }
    Ok(Output::data(out))
}

fn join_ints(row: &[i8]) -> String {
    row.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Accepts either a normal-graph file or a hypergraph file whose every
/// hyperarc/hyperedge has cardinality 2.
fn adjacency(file: &Path) -> Result<Output, Failure> {
    let text = read_file(file)?;
    let (oriented_graph, unoriented_graph) = match file_keyword(&text) {
        Some("graph") => match parse_graph(&text)? {
            GraphDocument::Oriented(g) => (Some(g), None),
            GraphDocument::Unoriented(g) => (None, Some(g)),
        },
        _ => match parse_hypergraph(&text)? {
            HypergraphDocument::Oriented(h) => (
                Some(OrientedNormalGraph::from_hypergraph(&h).ok_or_else(|| {
                    Failure::validation("the hypergraph is not a normal graph")
                })?),
                None,
            ),
            HypergraphDocument::Unoriented(h) => (
                None,
                Some(UnorientedNormalGraph::from_hypergraph(&h).ok_or_else(|| {
                    Failure::validation("the hypergraph is not a normal graph")
                })?),
            ),
        },
    };
    let mut out = String::new();
    if let Some(g) = oriented_graph {
        let a = adjacency_matrix_oriented(&g);
        for i in g.vertices() {
            let row: Vec<String> = g.vertices().map(|j| a.entry(i, j).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    } else if let Some(g) = unoriented_graph {
        let a = adjacency_matrix_unoriented(&g);
        for i in g.vertices() {
            let row: Vec<String> = g.vertices().map(|j| a.entry(i, j).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    Ok(Output::data(out))
}

/// First token of the first content line decides which grammar applies.
fn file_keyword(text: &str) -> Option<&str> {
    crate::format::content_lines(text)
        .next()
        .and_then(|(_, line)| line.split_whitespace().next())
}

fn tensor(cmd: TensorCommand) -> Result<Output, Failure> {
    match cmd {
        TensorCommand::Encode {
            file,
            full,
            increased,
        } => {
            let doc = parse_hypergraph(&read_file(&file)?)?;
            let mode = if full {
                EntryMode::Full
            } else {
                EntryMode::Simplified
            };
            let t = match &doc {
                HypergraphDocument::Oriented(h) => encode_tensor_oriented(h, mode, increased),
                HypergraphDocument::Unoriented(h) => {
                    if increased {
                        return Err(Failure::validation(
                            "increased order applies to oriented hypergraphs only",
                        ));
                    }
                    encode_tensor_unoriented(h, mode)
                }
            }
            .map_err(Failure::validation)?;
            Ok(Output::data(write_tensor(&t)))
        }
        TensorCommand::Decode {
            file,
            greedy,
            verify,
        } => {
            let t = parse_tensor(&read_file(&file)?)?;
            if t.oriented() {
                let strategy = if greedy {
                    DecodeStrategy::Greedy
                } else {
                    DecodeStrategy::Strict
                };
                match decode_tensor_oriented(&t, strategy) {
                    Ok(h) => {
                        if verify && !verify_decode_oriented(&t, &h) {
                            return Err(Failure::validation(
                                "decoded hypergraph does not re-encode to the input tensor",
                            ));
                        }
                        Ok(Output::data(write_hypergraph_oriented(&h)))
                    }
                    Err(e @ AlgebraicError::AmbiguousTensor { .. }) => Err(Failure {
                        code: 3,
                        message: format!("{e}; retry with --greedy to commit to maximal sides"),
                    }),
                    Err(e) => Err(Failure::validation(e)),
                }
            } else {
                let h = decode_tensor_unoriented(&t).map_err(Failure::validation)?;
                if verify && !verify_decode_unoriented(&t, &h) {
                    return Err(Failure::validation(
                        "decoded hypergraph does not re-encode to the input tensor",
                    ));
                }
                Ok(Output::data(write_hypergraph_unoriented(&h)))
            }
        }
    }
}

fn represent(cmd: RepresentCommand) -> Result<Output, Failure> {
    match cmd {
        RepresentCommand::Bipartite { file, anchors } => {
            let doc = parse_hypergraph(&read_file(&file)?)?;
            let (graph_text, anchor_text) = match &doc {
                HypergraphDocument::Oriented(h) => {
                    let x = to_bipartite_oriented(h);
                    (write_graph_oriented(x.graph()), write_anchors(x.anchors()))
                }
                HypergraphDocument::Unoriented(h) => {
                    let x = to_bipartite_unoriented(h);
                    (
                        write_graph_unoriented(x.graph()),
                        write_anchors(x.anchors()),
                    )
                }
            };
            if let Some(path) = anchors {
                std::fs::write(&path, anchor_text).map_err(|e| {
                    Failure::validation(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            Ok(Output::data(graph_text))
        }
        RepresentCommand::Clique { file } => {
            let doc = parse_hypergraph(&read_file(&file)?)?;
            let g = match &doc {
                HypergraphDocument::Oriented(h) => to_clique_oriented(h),
                HypergraphDocument::Unoriented(h) => to_clique_unoriented(h),
            };
            Ok(Output::data(write_multigraph(&g)))
        }
    }
}

fn reconstruct(graph: &Path, anchors: &Path) -> Result<Output, Failure> {
    let doc = parse_graph(&read_file(graph)?)?;
    let hints = parse_anchors(&read_file(anchors)?)?;
    match doc {
        GraphDocument::Oriented(g) => {
            let back = from_bipartite_oriented(&g, &hints).map_err(Failure::validation)?;
            Ok(Output::data(write_hypergraph_oriented(&back.hypergraph)))
        }
        GraphDocument::Unoriented(g) => {
            let back = from_bipartite_unoriented(&g, &hints).map_err(Failure::validation)?;
            Ok(Output::data(write_hypergraph_unoriented(&back.hypergraph)))
        }
    }
}

fn anchors(graph: &Path, min_card: usize, max_card: usize) -> Result<Output, Failure> {
    let doc = parse_graph(&read_file(graph)?)?;
    let inferred = match doc {
        GraphDocument::Oriented(g) => infer_anchors_oriented(&g, min_card, max_card),
        GraphDocument::Unoriented(g) => infer_anchors_unoriented(&g, min_card, max_card),
    };
    if inferred.unresolved.is_empty() {
        Ok(Output::data(write_anchors(&inferred.anchors)))
    } else {
        let ids: Vec<String> = inferred
            .unresolved
            .iter()
            .map(|v| v.get().to_string())
            .collect();
        Err(Failure::validation(format!(
            "no degree leaves the bounds in the components containing vertices {}; widen the bounds or supply anchors",
            ids.join(" ")
        )))
    }
}

#[allow(clippy::too_many_arguments)]
fn op(
    kind: OpKind,
    file: &Path,
    function: &Path,
    weights: Option<PathBuf>,
    preset: Option<String>,
    exponents: Option<String>,
    modes: Option<String>,
    p: f64,
    method: MethodArg,
) -> Result<Output, Failure> {
    let doc = parse_hypergraph(&read_file(file)?)?;
    let h = doc
        .oriented()
        .ok_or_else(|| Failure::validation("operators apply to oriented hypergraphs"))?;
    let (n, m) = (h.vertex_count(), h.hyperarc_count());

    let w = match weights {
        Some(path) => parse_weights(&read_file(&path)?)?.into_assignment(n, m)?,
        None => WeightAssignment::uniform(n, m),
    };

    let mut cfg = match &preset {
        Some(name) => Preset::from_name(name)
            .ok_or_else(|| {
                let known: Vec<&str> = Preset::ALL.iter().map(|p| p.name()).collect();
                Failure::args(format!(
                    "unknown preset {name} (expected one of: {})",
                    known.join(", ")
                ))
            })?
            .config(),
        None => OperatorConfig::default(),
    };
    if let Some(spec) = &exponents {
        let e = parse_exponents(spec)?;
        cfg.alpha = e[0];
        cfg.beta = e[1];
        cfg.gamma = e[2];
        cfg.epsilon = e[3];
        cfg.eta = e[4];
        cfg.zeta = e[5];
        cfg.theta = e[6];
    }
    if let Some(spec) = &modes {
        apply_modes(&mut cfg, spec)?;
    }

    let fdoc = parse_function(&read_file(function)?)?;
    let method: Method = method.into();
    let ve = Failure::validation;
    let data = match kind {
        OpKind::GradV => write_hyperarc_function(
            &vertex_gradient(h, &w, &cfg, &fdoc.into_vertex_function(n)?).map_err(ve)?,
        ),
        OpKind::AdjointV => write_vertex_function(
            &vertex_adjoint(h, &w, &cfg, &fdoc.into_hyperarc_function(m)?).map_err(ve)?,
        ),
        OpKind::DivV => write_vertex_function(
            &vertex_divergence(h, &w, &cfg, &fdoc.into_hyperarc_function(m)?).map_err(ve)?,
        ),
        OpKind::LapV => write_vertex_function(
            &vertex_laplacian(h, &w, &cfg, &fdoc.into_vertex_function(n)?, method)
                .map_err(ve)?,
        ),
        OpKind::PlapV => write_vertex_function(
            &vertex_p_laplacian(h, &w, &cfg, &fdoc.into_vertex_function(n)?, p, method)
                .map_err(ve)?,
        ),
        OpKind::GradA => write_vertex_function(
            &hyperarc_gradient(h, &w, &cfg, &fdoc.into_hyperarc_function(m)?).map_err(ve)?,
        ),
        OpKind::AdjointA => write_hyperarc_function(
            &hyperarc_adjoint(h, &w, &cfg, &fdoc.into_vertex_function(n)?).map_err(ve)?,
        ),
        OpKind::DivA => write_hyperarc_function(
            &hyperarc_divergence(h, &w, &cfg, &fdoc.into_vertex_function(n)?).map_err(ve)?,
        ),
        OpKind::LapA => write_hyperarc_function(
            &hyperarc_laplacian(h, &w, &cfg, &fdoc.into_hyperarc_function(m)?, method)
                .map_err(ve)?,
        ),
        OpKind::PlapA => write_hyperarc_function(
            &hyperarc_p_laplacian(h, &w, &cfg, &fdoc.into_hyperarc_function(m)?, p, method)
                .map_err(ve)?,
        ),
    };
    Ok(Output::data(data))
}

fn parse_exponents(spec: &str) -> Result<[f64; 7], Failure> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 7 {
        return Err(Failure::args(format!(
            "--exponents needs 7 comma-separated values (alpha,beta,gamma,epsilon,eta,zeta,theta), got {}",
            parts.len()
        )));
    }
    let mut out = [0.0; 7];
    for (slot, part) in out.iter_mut().zip(&parts) {
        let value: f64 = part
            .trim()
            .parse()
            .map_err(|_| Failure::args(format!("bad exponent {part:?}")))?;
        if !value.is_finite() {
            return Err(Failure::args(format!("exponent {part:?} is not finite")));
        }
        *slot = value;
    }
    Ok(out)
}

fn apply_modes(cfg: &mut OperatorConfig, spec: &str) -> Result<(), Failure> {
    for part in spec.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::args(format!("bad mode {part:?}: expected key=value")))?;
        match (key.trim(), value.trim()) {
            ("vertex-cardinality", "reciprocal") => {
                cfg.vertex_cardinality_mode = VertexCardinalityMode::Reciprocal;
            }
            ("vertex-cardinality", "unit") => {
                cfg.vertex_cardinality_mode = VertexCardinalityMode::Unit;
            }
            ("vertex-adjoint", "mirror") => {
                cfg.vertex_adjoint_mode = VertexAdjointMode::Mirror;
            }
            ("vertex-adjoint", "negated-total-degree") => {
                cfg.vertex_adjoint_mode = VertexAdjointMode::NegatedTotalDegree;
            }
            ("hyperarc-degree", "reciprocal-in-out") => {
                cfg.hyperarc_degree_mode = HyperarcDegreeMode::ReciprocalInOut;
            }
            ("hyperarc-degree", "unit") => {
                cfg.hyperarc_degree_mode = HyperarcDegreeMode::Unit;
            }
            ("hyperarc-adjoint", "mirror") => {
                cfg.hyperarc_adjoint_mode = HyperarcAdjointMode::Mirror;
            }
            ("hyperarc-adjoint", "negated-total-degree") => {
                cfg.hyperarc_adjoint_mode = HyperarcAdjointMode::NegatedTotalDegree;
            }
            (k, v) => {
                return Err(Failure::args(format!(
                    "unknown mode {k}={v} (keys: vertex-cardinality, vertex-adjoint, hyperarc-degree, hyperarc-adjoint)"
                )));
            }
        }
    }
    Ok(())
}
