use std::fmt::Write as _;

use hypercalc_core::VertexId;
use hypercalc_represent::{AnchorHint, AnchorHints, VertexRole};

use crate::error::IoError;
use crate::format::{parse_count, split_header};

/// Grammar: header `anchors`, then one `<vertex> original|encoder` line per
/// hint (one hint per connected component suffices for reconstruction).
pub fn parse_anchors(text: &str) -> Result<AnchorHints, IoError> {
    let ((header_line, header), rest) = split_header(text, "anchors")?;
    if header != "anchors" {
        return Err(IoError::parse(
            header_line,
            format!("expected `anchors` header, got `{header}`"),
        ));
    }
    let mut hints = Vec::new();
    for (line, text) in rest {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let (vertex, role) = match tokens.as_slice() {
            [vertex, "original"] => (*vertex, VertexRole::Original),
            [vertex, "encoder"] => (*vertex, VertexRole::Encoder),
            _ => {
                return Err(IoError::parse(
                    line,
                    format!("expected `<vertex> original|encoder`, got `{text}`"),
                ))
            }
        };
        let id = parse_count::<u32>(vertex, line, "a vertex id")?;
        if id == 0 {
            return Err(IoError::parse(line, "vertex ids are 1-based"));
        }
        hints.push(AnchorHint::new(VertexId::new(id), role));
    }
    Ok(AnchorHints::new(hints))
}

/// Canonical text: hints in listing order.
pub fn write_anchors(hints: &AnchorHints) -> String {
    let mut out = String::from("anchors\n");
    for hint in hints.hints() {
        let _ = writeln!(
            out,
            "{} {}",
            hint.vertex.get(),
            match hint.role {
                VertexRole::Original => "original",
                VertexRole::Encoder => "encoder",
            }
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypercalc_core::UnorientedHypergraph;
    use hypercalc_represent::{from_bipartite_unoriented, to_bipartite_unoriented};

    #[test]
    fn hints_round_trip() {
        let hints = AnchorHints::new(vec![
            AnchorHint::new(VertexId::new(1), VertexRole::Original),
            AnchorHint::new(VertexId::new(9), VertexRole::Encoder),
        ]);
        let text = write_anchors(&hints);
        assert_eq!(text, "anchors\n1 original\n9 encoder\n");
        assert_eq!(parse_anchors(&text).unwrap(), hints);
    }

    #[test]
    fn serialized_ground_truth_hints_still_reconstruct() {
        let h = UnorientedHypergraph::build(8, [vec![1, 2, 5], vec![2, 3, 7, 8], vec![6, 7]])
            .unwrap();
        let x = to_bipartite_unoriented(&h);
        let hints = parse_anchors(&write_anchors(x.anchors())).unwrap();
        let back = from_bipartite_unoriented(x.graph(), &hints).unwrap();
        assert_eq!(back.hypergraph, h);
    }

    #[test]
    fn bad_roles_are_parse_errors() {
        let err = parse_anchors("anchors\n1 middle\n").unwrap_err();
        assert_eq!(
            err,
            IoError::Parse {
                line: 2,
                detail: "expected `<vertex> original|encoder`, got `1 middle`".into()
            }
        );
    }
}
