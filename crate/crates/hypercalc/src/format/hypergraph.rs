use std::fmt::Write as _;

use hypercalc_core::{OrientedHypergraph, UnorientedHypergraph, VertexSet};

use crate::error::IoError;
use crate::format::{parse_count, split_header};

/// A parsed hypergraph file: the header fixes which orientation the
/// document carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypergraphDocument {
    Oriented(OrientedHypergraph),
    Unoriented(UnorientedHypergraph),
}

impl HypergraphDocument {
    pub fn oriented(&self) -> Option<&OrientedHypergraph> {
        match self {
            HypergraphDocument::Oriented(h) => Some(h),
            HypergraphDocument::Unoriented(_) => None,
        }
    }

    pub fn unoriented(&self) -> Option<&UnorientedHypergraph> {
        match self {
            HypergraphDocument::Oriented(_) => None,
            HypergraphDocument::Unoriented(h) => Some(h),
        }
    }

    pub fn vertex_count(&self) -> u32 {
        match self {
            HypergraphDocument::Oriented(h) => h.vertex_count(),
            HypergraphDocument::Unoriented(h) => h.vertex_count(),
        }
    }

    pub fn write(&self) -> String {
        match self {
            HypergraphDocument::Oriented(h) => write_hypergraph_oriented(h),
            HypergraphDocument::Unoriented(h) => write_hypergraph_unoriented(h),
        }
    }
}

/// Grammar: `hypergraph oriented|unoriented`, `vertices <N>`, then one
/// `arc out <ids...> in <ids...>` or `edge <ids...>` line per hyperarc or
/// hyperedge, in listing order.
pub fn parse_hypergraph(text: &str) -> Result<HypergraphDocument, IoError> {
    let ((header_line, header), rest) = split_header(text, "hypergraph")?;
    let oriented = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["hypergraph", "oriented"] => true,
        ["hypergraph", "unoriented"] => false,
        _ => {
            return Err(IoError::parse(
                header_line,
                format!("expected `hypergraph oriented|unoriented`, got `{header}`"),
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

    if oriented {
        let mut arcs: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
        for (line, text) in rest {
            arcs.push(parse_arc_line(text, line)?);
        }
        OrientedHypergraph::build(n, arcs)
            .map(HypergraphDocument::Oriented)
            .map_err(IoError::validation)
    } else {
        let mut edges: Vec<Vec<u32>> = Vec::new();
        for (line, text) in rest {
            let mut tokens = text.split_whitespace();
            if tokens.next() != Some("edge") {
                return Err(IoError::parse(
                    line,
                    format!("expected `edge <ids...>`, got `{text}`"),
                ));
            }
            let members = tokens
                .map(|t| parse_count::<u32>(t, line, "a vertex id"))
                .collect::<Result<Vec<u32>, IoError>>()?;
            edges.push(members);
        }
        UnorientedHypergraph::build(n, edges)
            .map(HypergraphDocument::Unoriented)
            .map_err(IoError::validation)
    }
}

fn parse_arc_line(text: &str, line: usize) -> Result<(Vec<u32>, Vec<u32>), IoError> {
    let mut tokens = text.split_whitespace().peekable();
    if tokens.next() != Some("arc") || tokens.next() != Some("out") {
        return Err(IoError::parse(
            line,
            format!("expected `arc out <ids...> in <ids...>`, got `{text}`"),
        ));
    }
    let mut out = Vec::new();
    for token in tokens.by_ref() {
        if token == "in" {
            // Empty sides fall through to the constructor's validation.
            let in_ = text
                .split_whitespace()
                .skip(3 + out.len())
                .map(|t| parse_count::<u32>(t, line, "a vertex id"))
                .collect::<Result<Vec<u32>, IoError>>()?;
            return Ok((out, in_));
        }
        out.push(parse_count::<u32>(token, line, "a vertex id")?);
    }
    Err(IoError::parse(
        line,
        format!("missing `in` keyword in `{text}`"),
    ))
}

fn push_ids(out: &mut String, ids: &VertexSet) {
    for v in ids.iter() {
        let _ = write!(out, " {}", v.get());
    }
}

/// Canonical text: sorted ids within each side, hyperarcs in listing order,
/// LF endings.
pub fn write_hypergraph_oriented(h: &OrientedHypergraph) -> String {
    let mut out = String::from("hypergraph oriented\n");
    let _ = writeln!(out, "vertices {}", h.vertex_count());
    for arc in h.hyperarcs() {
        out.push_str("arc out");
        push_ids(&mut out, arc.out_set());
        out.push_str(" in");
        push_ids(&mut out, arc.in_set());
        out.push('\n');
    }
    out
}

pub fn write_hypergraph_unoriented(h: &UnorientedHypergraph) -> String {
    let mut out = String::from("hypergraph unoriented\n");
    let _ = writeln!(out, "vertices {}", h.vertex_count());
    for edge in h.hyperedges() {
        out.push_str("edge");
        push_ids(&mut out, edge.members());
        out.push('\n');
    }
    out
}
