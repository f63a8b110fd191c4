use std::collections::BTreeMap;
use std::fmt::Write as _;

use hypercalc_spaces::WeightAssignment;

use crate::error::IoError;
use crate::format::{parse_count, parse_value, split_header};

/// Sparse weight listing as read from or written to a file: entries name
/// only the weights that differ from the default 1.0 (a full listing is
/// also legal). Vertex ids and hyperarc positions are 1-based.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WeightsDocument {
    pub vertex_w_i: BTreeMap<u32, f64>,
    pub vertex_w_g: BTreeMap<u32, f64>,
    pub arc_w_i: BTreeMap<usize, f64>,
    pub arc_w_g: BTreeMap<usize, f64>,
}

impl WeightsDocument {
    /// Full listing of an assignment (every weight explicit).
    pub fn from_assignment(w: &WeightAssignment) -> WeightsDocument {
        let mut doc = WeightsDocument::default();
        for v in 1..=w.vertex_count() as u32 {
            let id = hypercalc_core::VertexId::new(v);
            doc.vertex_w_i.insert(v, w.w_i(id));
            doc.vertex_w_g.insert(v, w.w_g(id));
        }
        for q in 1..=w.hyperarc_count() {
            doc.arc_w_i.insert(q, w.big_w_i(q - 1));
            doc.arc_w_g.insert(q, w.big_w_g(q - 1));
        }
        doc
    }

    /// Materializes the listing over `n` vertices and `m` hyperarcs,
    /// defaulting unmentioned weights to 1.0.
    pub fn into_assignment(&self, n: u32, m: usize) -> Result<WeightAssignment, IoError> {
        let mut w_i = vec![1.0; n as usize];
        let mut w_g = vec![1.0; n as usize];
        let mut big_w_i = vec![1.0; m];
        let mut big_w_g = vec![1.0; m];
        for (dst, src, label) in [
            (&mut w_i, &self.vertex_w_i, "wI"),
            (&mut w_g, &self.vertex_w_g, "wG"),
        ] {
            for (&id, &value) in src {
                if id == 0 || id > n {
                    return Err(IoError::Validation {
                        detail: format!("vertex {label} entry {id} outside 1..={n}"),
                    });
                }
                dst[id as usize - 1] = value;
            }
        }
        for (dst, src, label) in [
            (&mut big_w_i, &self.arc_w_i, "WI"),
            (&mut big_w_g, &self.arc_w_g, "WG"),
        ] {
            for (&q, &value) in src {
                if q == 0 || q > m {
                    return Err(IoError::Validation {
                        detail: format!("arc {label} entry {q} outside 1..={m}"),
                    });
                }
                dst[q - 1] = value;
            }
        }
        WeightAssignment::new(w_i, w_g, big_w_i, big_w_g).map_err(IoError::validation)
    }
}

/// Grammar: header `weights`, then any number of `vertex wI <id> <value>`,
/// `vertex wG <id> <value>`, `arc WI <q> <value>`, `arc WG <q> <value>`
/// lines. Values are strictly positive decimals; repeating an entry is an
/// error.
pub fn parse_weights(text: &str) -> Result<WeightsDocument, IoError> {
    let ((header_line, header), rest) = split_header(text, "weights")?;
    if header != "weights" {
        return Err(IoError::parse(
            header_line,
            format!("expected `weights` header, got `{header}`"),
        ));
    }
    let mut doc = WeightsDocument::default();
    for (line, text) in rest {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let (kind, slot, id, value) = match tokens.as_slice() {
            [kind @ ("vertex" | "arc"), slot, id, value] => (*kind, *slot, *id, *value),
            _ => {
                return Err(IoError::parse(
                    line,
                    format!("expected `vertex wI|wG <id> <value>` or `arc WI|WG <q> <value>`, got `{text}`"),
                ))
            }
        };
        let value = parse_value(value, line)?;
        if value <= 0.0 {
            return Err(IoError::parse(
                line,
                format!("weights must be strictly positive, got {value}"),
            ));
        }
        let repeated = match (kind, slot) {
            ("vertex", "wI") => doc
                .vertex_w_i
                .insert(parse_count::<u32>(id, line, "a vertex id")?, value)
                .is_some(),
            ("vertex", "wG") => doc
                .vertex_w_g
                .insert(parse_count::<u32>(id, line, "a vertex id")?, value)
                .is_some(),
            ("arc", "WI") => doc
                .arc_w_i
                .insert(parse_count::<usize>(id, line, "a hyperarc position")?, value)
                .is_some(),
            ("arc", "WG") => doc
                .arc_w_g
                .insert(parse_count::<usize>(id, line, "a hyperarc position")?, value)
                .is_some(),
            _ => {
                return Err(IoError::parse(
                    line,
                    format!("unknown weight slot `{kind} {slot}`"),
                ))
            }
        };
        if repeated {
            return Err(IoError::parse(line, format!("repeated entry `{kind} {slot} {id}`")));
        }
    }
    Ok(doc)
}

/// Canonical text: wI entries, then wG, then WI, then WG, each sorted by
/// index.
pub fn write_weights(doc: &WeightsDocument) -> String {
    let mut out = String::from("weights\n");
    for (&id, &value) in &doc.vertex_w_i {
        let _ = writeln!(out, "vertex wI {id} {value}");
    }
    for (&id, &value) in &doc.vertex_w_g {
        let _ = writeln!(out, "vertex wG {id} {value}");
    }
    for (&q, &value) in &doc.arc_w_i {
        let _ = writeln!(out, "arc WI {q} {value}");
    }
    for (&q, &value) in &doc.arc_w_g {
        let _ = writeln!(out, "arc WG {q} {value}");
    }
    out
}
