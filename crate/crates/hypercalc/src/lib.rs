//! Facade over the hypergraph-calculus workspace: one crate that re-exports
//! the structures, spaces, operators, tensors, and expansions, and adds the
//! artifact plumbing around them — text formats, seeded random instances,
//! the property-suite runner, and the command-line dispatcher.
//!
//! Law sheet for the plumbing (all checked by tests):
//!
//! | law | statement |
//! |-----|-----------|
//! | roundtrip | `parse(write(x)) = x` for every format; `write(parse(t))` canonicalizes `t` |
//! | determinism | serializations are byte-identical for a given structure (sorted sides, lexicographic tensor entries, LF endings) |
//! | replay | [`random_instance`] and [`property_suite`] are pure functions of their seeds |
//! | coverage | the suite replays every module's laws, and its fixed fixtures (the worked tensors, the collision counterexamples, the printed incidence matrices) run at any trial count |
//! | exit codes | 0 success, 1 validation failure, 2 parse error, 3 ambiguous decode, 4 property-suite failure |
//!
//! File formats are line-oriented text: a self-identifying header
//! (`hypergraph oriented`, `graph unoriented`, `multigraph …`, `weights`,
//! `vertexfn`, `arcfn`, `tensor …`, `anchors`), then one record per line,
//! with `#` starting a comment and all ids 1-based. See [`format`].
//!
//! Randomness comes from one named generator — ChaCha8 seeded with the
//! given `u64` — so instances, trials, and reports replay bit-for-bit
//! across platforms. Suite trials derive independent sub-seeds and are
//! emitted in sorted sub-seed order, making the report independent of
//! evaluation order.
//!
//! The command-line surface is [`cli_dispatch`]; the `hypercalc` binary is
//! a thin wrapper around it. Subcommands: `info`, `validate`, `switch`,
//! `incidence`, `adjacency`, `tensor encode|decode`, `represent
//! bipartite|clique`, `reconstruct`, `anchors`, `op`, `check`. Diagnostics
//! go to stderr; data goes to stdout.

pub use hypercalc_algebraic::*;
pub use hypercalc_core::*;
pub use hypercalc_operators::*;
pub use hypercalc_represent::*;
pub use hypercalc_spaces::*;

mod cli;
mod error;
pub mod format;
pub mod random;
pub mod suite;

pub use cli::cli_dispatch;
pub use error::IoError;
pub use random::{random_instance, random_weighted_instance};
pub use suite::{property_suite, run_suite, PropertyOutcome, PropertyReport, SuiteKind};
