use std::fmt::Write as _;

use hypercalc_represent::MultiGraph;

use crate::error::IoError;
use crate::format::{parse_count, split_header};

/// Grammar: `multigraph oriented|unoriented`, `vertices <N>`, then one
/// `arc <tail> <head> <multiplicity>` or `edge <a> <b> <multiplicity>` line
/// per distinct arc or edge.
pub fn parse_multigraph(text: &str) -> Result<MultiGraph, IoError> {
    let ((header_line, header), rest) = split_header(text, "multigraph")?;
    let oriented = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["multigraph", "oriented"] => true,
        ["multigraph", "unoriented"] => false,
        _ => {
            return Err(IoError::parse(
                header_line,
                format!("expected `multigraph oriented|unoriented`, got `{header}`"),
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
    let mut entries: Vec<((u32, u32), u64)> = Vec::new();
    for (line, text) in rest {
        match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            [k, a, b, m] if *k == keyword => entries.push((
                (
                    parse_count::<u32>(a, line, "a vertex id")?,
                    parse_count::<u32>(b, line, "a vertex id")?,
                ),
                parse_count::<u64>(m, line, "a multiplicity")?,
            )),
            _ => {
                return Err(IoError::parse(
                    line,
                    format!("expected `{keyword} <id> <id> <multiplicity>`, got `{text}`"),
                ))
            }
        }
    }
    MultiGraph::from_entries(oriented, n, entries).map_err(IoError::validation)
}

/// Canonical text: entries in sorted endpoint order.
pub fn write_multigraph(g: &MultiGraph) -> String {
    let keyword = if g.oriented() { "arc" } else { "edge" };
    let mut out = String::from("multigraph ");
    out.push_str(if g.oriented() { "oriented" } else { "unoriented" });
    out.push('\n');
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    for ((a, b), m) in g.entries() {
        let _ = writeln!(out, "{keyword} {a} {b} {m}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypercalc_core::UnorientedHypergraph;
    use hypercalc_represent::to_clique_unoriented;

    #[test]
    fn clique_expansions_round_trip() {
        let h = UnorientedHypergraph::build(8, [vec![1, 2, 3], vec![2, 3, 7, 8], vec![6, 7]])
            .unwrap();
        let g = to_clique_unoriented(&h);
        let text = write_multigraph(&g);
        assert!(text.starts_with("multigraph unoriented\nvertices 8\nedge 1 2 1\n"));
        assert!(text.contains("edge 2 3 2\n"));
        assert_eq!(parse_multigraph(&text).unwrap(), g);
    }

    #[test]
    fn oriented_entries_keep_their_direction() {
        let g = MultiGraph::from_entries(true, 3, [((2, 1), 4u64), ((1, 2), 1)]).unwrap();
        let text = write_multigraph(&g);
        assert_eq!(text, "multigraph oriented\nvertices 3\narc 1 2 1\narc 2 1 4\n");
        assert_eq!(parse_multigraph(&text).unwrap(), g);
    }

    #[test]
    fn malformed_lines_carry_their_number() {
        let err = parse_multigraph("multigraph oriented\nvertices 3\narc 1 2\n").unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 3, .. }), "{err:?}");
        let err =
            parse_multigraph("multigraph unoriented\nvertices 3\nedge 1 1 2\n").unwrap_err();
        assert!(matches!(err, IoError::Validation { .. }), "{err:?}");
    }
}
