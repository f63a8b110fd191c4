use std::fmt::Write as _;

use hypercalc_core::{OrientedNormalGraph, UnorientedNormalGraph};

use crate::error::IoError;
use crate::format::{parse_count, split_header};

/// A parsed normal-graph file; the header fixes the orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphDocument {
    Oriented(OrientedNormalGraph),
    Unoriented(UnorientedNormalGraph),
}

impl GraphDocument {
    pub fn oriented(&self) -> Option<&OrientedNormalGraph> {
        match self {
            GraphDocument::Oriented(g) => Some(g),
            GraphDocument::Unoriented(_) => None,
        }
    }

    pub fn unoriented(&self) -> Option<&UnorientedNormalGraph> {
        match self {
            GraphDocument::Oriented(_) => None,
            GraphDocument::Unoriented(g) => Some(g),
        }
    }

    pub fn write(&self) -> String {
        match self {
            GraphDocument::Oriented(g) => write_graph_oriented(g),
            GraphDocument::Unoriented(g) => write_graph_unoriented(g),
        }
    }
}

/// Grammar: `graph oriented|unoriented`, `vertices <N>`, then one
/// `arc <tail> <head>` or `edge <a> <b>` line per arc or edge.
pub fn parse_graph(text: &str) -> Result<GraphDocument, IoError> {
    let ((header_line, header), rest) = split_header(text, "graph")?;
    let oriented = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["graph", "oriented"] => true,
        ["graph", "unoriented"] => false,
        _ => {
            return Err(IoError::parse(
                header_line,
                format!("expected `graph oriented|unoriented`, got `{header}`"),
            ))
        }
    };

    let mut rest = rest.into_iter();
    let (count_line, count_text) = rest
        .next()
        .ok_or_else(|| IoError::parse(header_line, "missing `vertices <N>` line"))?;
    let n = match count_text.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["vertices", n] => parse_count::<u32>(n, count_line, "a vertex count")?,
        _ => {
            return Err(IoError::parse(
                count_line,
                format!("expected `vertices <N>`, got `{count_text}`"),
            ))
        }
    };

    let keyword = if oriented { "arc" } else { "edge" };
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for (line, text) in rest {
        match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            [k, a, b] if *k == keyword => pairs.push((
                parse_count::<u32>(a, line, "a vertex id")?,
                parse_count::<u32>(b, line, "a vertex id")?,
            )),
            _ => {
                return Err(IoError::parse(
                    line,
                    format!("expected `{keyword} <id> <id>`, got `{text}`"),
                ))
            }
        }
    }

    if oriented {
        OrientedNormalGraph::build(n, pairs)
            .map(GraphDocument::Oriented)
            .map_err(IoError::validation)
    } else {
        UnorientedNormalGraph::build(n, pairs)
            .map(GraphDocument::Unoriented)
            .map_err(IoError::validation)
    }
}

pub fn write_graph_oriented(g: &OrientedNormalGraph) -> String {
    let mut out = String::from("graph oriented\n");
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    for arc in g.arcs() {
        let _ = writeln!(out, "arc {} {}", arc.tail().get(), arc.head().get());
    }
    out
}

pub fn write_graph_unoriented(g: &UnorientedNormalGraph) -> String {
    let mut out = String::from("graph unoriented\n");
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    for edge in g.edges() {
        let _ = writeln!(out, "edge {} {}", edge.lo().get(), edge.hi().get());
    }
    out
}
