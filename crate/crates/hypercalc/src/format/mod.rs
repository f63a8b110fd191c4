//! Text formats: small line-oriented grammars with deterministic canonical
//! writers. Every format starts with a self-identifying header line, uses
//! 1-based ids, LF endings, and `#` comments; `parse(write(x)) == x` for
//! every writable object.

mod anchors;
mod function;
mod graph;
mod hypergraph;
mod multigraph;
mod tensor;
mod weights;

pub use anchors::{parse_anchors, write_anchors};
pub use function::{
    parse_function, write_hyperarc_function, write_vertex_function, FunctionDocument,
    FunctionKind,
};
pub use graph::{parse_graph, write_graph_oriented, write_graph_unoriented, GraphDocument};
pub use hypergraph::{
    parse_hypergraph, write_hypergraph_oriented, write_hypergraph_unoriented,
    HypergraphDocument,
};
pub use multigraph::{parse_multigraph, write_multigraph};
pub use tensor::{parse_tensor, write_tensor};
pub use weights::{parse_weights, write_weights, WeightsDocument};

use crate::error::IoError;

/// Physical lines with 1-based numbers, comments stripped and blanks
/// dropped; the unit every parser consumes.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let body = body.trim();
        if body.is_empty() {
            None
        } else {
            Some((i + 1, body))
        }
    })
}

pub(crate) fn parse_count<T: std::str::FromStr>(
    token: &str,
    line: usize,
    what: &str,
) -> Result<T, IoError> {
    token
        .parse()
        .map_err(|_| IoError::parse(line, format!("expected {what}, got `{token}`")))
}

pub(crate) fn parse_value(token: &str, line: usize) -> Result<f64, IoError> {
    let value: f64 = token
        .parse()
        .map_err(|_| IoError::parse(line, format!("expected a decimal value, got `{token}`")))?;
    if !value.is_finite() {
        return Err(IoError::parse(line, format!("value `{token}` is not finite")));
    }
    Ok(value)
}

/// The header is the first content line; everything else follows it.
pub(crate) fn split_header<'a>(
    text: &'a str,
    expected: &str,
) -> Result<((usize, &'a str), Vec<(usize, &'a str)>), IoError> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| IoError::parse(1, format!("empty document, expected `{expected}` header")))?;
    Ok((header, lines.collect()))
}
