use std::collections::BTreeMap;
use std::fmt::Write as _;

use hypercalc_spaces::{HyperarcFunction, VertexFunction};

use crate::error::IoError;
use crate::format::{parse_count, parse_value, split_header};

/// Which space a function file indexes: vertices or hyperarcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionKind {
    Vertex,
    Hyperarc,
}

impl FunctionKind {
    fn header(self) -> &'static str {
        match self {
            FunctionKind::Vertex => "vertexfn",
            FunctionKind::Hyperarc => "arcfn",
        }
    }
}

/// A parsed function file: 1-based indices to values. Unlike weights,
/// functions have no default — materialization demands every index.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionDocument {
    pub kind: FunctionKind,
    pub entries: BTreeMap<u32, f64>,
}

impl FunctionDocument {
    pub fn from_vertex_function(f: &VertexFunction) -> FunctionDocument {
        FunctionDocument {
            kind: FunctionKind::Vertex,
            entries: indexed(f.values()),
        }
    }

    pub fn from_hyperarc_function(f: &HyperarcFunction) -> FunctionDocument {
        FunctionDocument {
            kind: FunctionKind::Hyperarc,
            entries: indexed(f.values()),
        }
    }

    /// Materializes over `n` vertices; every index in `1..=n` must appear.
    pub fn into_vertex_function(&self, n: u32) -> Result<VertexFunction, IoError> {
        if self.kind != FunctionKind::Vertex {
            return Err(IoError::Validation {
                detail: "expected a `vertexfn` file, got `arcfn`".into(),
            });
        }
        VertexFunction::new(self.dense(n as usize)?).map_err(IoError::validation)
    }

    /// Materializes over `m` hyperarcs; every index in `1..=m` must appear.
    pub fn into_hyperarc_function(&self, m: usize) -> Result<HyperarcFunction, IoError> {
        if self.kind != FunctionKind::Hyperarc {
            return Err(IoError::Validation {
                detail: "expected an `arcfn` file, got `vertexfn`".into(),
            });
        }
        HyperarcFunction::new(self.dense(m)?).map_err(IoError::validation)
    }

    fn dense(&self, len: usize) -> Result<Vec<f64>, IoError> {
        if self.entries.contains_key(&0) {
            return Err(IoError::Validation {
                detail: "entry index 0 outside the 1-based range".into(),
            });
        }
        let mut values = Vec::with_capacity(len);
        for index in 1..=len as u32 {
            match self.entries.get(&index) {
                Some(&value) => values.push(value),
                None => {
                    return Err(IoError::Validation {
                        detail: format!("missing entry for index {index} (need all of 1..={len})"),
                    })
                }
            }
        }
        if let Some((&index, _)) = self.entries.iter().next_back() {
            if index as usize > len {
                return Err(IoError::Validation {
                    detail: format!("entry index {index} outside 1..={len}"),
                });
            }
        }
        Ok(values)
    }
}

fn indexed(values: &[f64]) -> BTreeMap<u32, f64> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as u32 + 1, v))
        .collect()
}

/// Grammar: header `vertexfn` or `arcfn`, then one `<index> <value>` line
/// per entry; indices must not repeat.
pub fn parse_function(text: &str) -> Result<FunctionDocument, IoError> {
    let ((header_line, header), rest) = split_header(text, "vertexfn|arcfn")?;
    let kind = match header {
        "vertexfn" => FunctionKind::Vertex,
        "arcfn" => FunctionKind::Hyperarc,
        _ => {
            return Err(IoError::parse(
                header_line,
                format!("expected `vertexfn` or `arcfn` header, got `{header}`"),
            ))
        }
    };
    let mut entries = BTreeMap::new();
    for (line, text) in rest {
        let (index, value) = match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            [index, value] => (
                parse_count::<u32>(index, line, "an index")?,
                parse_value(value, line)?,
            ),
            _ => {
                return Err(IoError::parse(
                    line,
                    format!("expected `<index> <value>`, got `{text}`"),
                ))
            }
        };
        if entries.insert(index, value).is_some() {
            return Err(IoError::parse(line, format!("repeated index {index}")));
        }
    }
    Ok(FunctionDocument { kind, entries })
}

fn write_entries(header: &str, values: &[f64]) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for (i, value) in values.iter().enumerate() {
        let _ = writeln!(out, "{} {}", i + 1, value);
    }
    out
}

pub fn write_vertex_function(f: &VertexFunction) -> String {
    write_entries(FunctionKind::Vertex.header(), f.values())
}

pub fn write_hyperarc_function(f: &HyperarcFunction) -> String {
    write_entries(FunctionKind::Hyperarc.header(), f.values())
}
