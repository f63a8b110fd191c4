use std::collections::BTreeMap;
use std::fmt::Write as _;

use hypercalc_algebraic::{EntryMode, Rational, SparseAdjacencyTensor};

use crate::error::IoError;
use crate::format::{parse_count, split_header};

/// Grammar: header `tensor <oriented|unoriented> order <k> dim <N> mode
/// <full|simplified>`, then one line per nonzero entry: `k` space-separated
/// 1-based indices followed by the value as `num/den`. Entries are written
/// in lexicographic index order.
pub fn parse_tensor(text: &str) -> Result<SparseAdjacencyTensor, IoError> {
    let ((header_line, header), rest) = split_header(text, "tensor")?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (oriented, order, dim, mode) = match tokens.as_slice() {
        ["tensor", orientation, "order", order, "dim", dim, "mode", mode] => {
            let oriented = match *orientation {
                "oriented" => true,
                "unoriented" => false,
                other => {
                    return Err(IoError::parse(
                        header_line,
                        format!("expected `oriented` or `unoriented`, got `{other}`"),
                    ))
                }
            };
            let mode = match *mode {
                "full" => EntryMode::Full,
                "simplified" => EntryMode::Simplified,
                other => {
                    return Err(IoError::parse(
                        header_line,
                        format!("expected mode `full` or `simplified`, got `{other}`"),
                    ))
                }
            };
            (
                oriented,
                parse_count::<usize>(order, header_line, "an order")?,
                parse_count::<u32>(dim, header_line, "a dimension")?,
                mode,
            )
        }
        _ => {
            return Err(IoError::parse(
                header_line,
                format!(
                    "expected `tensor <oriented|unoriented> order <k> dim <N> mode <full|simplified>`, got `{header}`"
                ),
            ))
        }
    };

    let mut entries: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (line, text) in rest {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != order + 1 {
            return Err(IoError::parse(
                line,
                format!(
                    "expected {order} indices and a value, got {} tokens",
                    tokens.len()
                ),
            ));
        }
        let indices = tokens[..order]
            .iter()
            .map(|t| parse_count::<u32>(t, line, "an index"))
            .collect::<Result<Vec<u32>, IoError>>()?;
        let value = parse_rational(tokens[order], line)?;
        if entries.insert(indices, value).is_some() {
            return Err(IoError::parse(line, "repeated index tuple"));
        }
    }
    SparseAdjacencyTensor::new(oriented, order, dim, mode, entries).map_err(IoError::validation)
}

fn parse_rational(token: &str, line: usize) -> Result<Rational, IoError> {
    let (num, den) = token.split_once('/').ok_or_else(|| {
        IoError::parse(line, format!("expected a value as `num/den`, got `{token}`"))
    })?;
    let num: i64 = num
        .parse()
        .map_err(|_| IoError::parse(line, format!("bad numerator `{num}`")))?;
    let den: i64 = den
        .parse()
        .map_err(|_| IoError::parse(line, format!("bad denominator `{den}`")))?;
    if den == 0 {
        return Err(IoError::parse(line, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text: entries in lexicographic index order, values as reduced
/// `num/den` fractions.
pub fn write_tensor(t: &SparseAdjacencyTensor) -> String {
    let mut out = String::from("tensor ");
    out.push_str(if t.oriented() { "oriented" } else { "unoriented" });
    let _ = write!(out, " order {} dim {} mode ", t.order(), t.dim());
    out.push_str(match t.mode() {
        EntryMode::Full => "full",
        EntryMode::Simplified => "simplified",
    });
    out.push('\n');
    for (indices, value) in t.entries() {
        for index in indices {
            let _ = write!(out, "{index} ");
        }
        let _ = writeln!(out, "{}/{}", value.numer(), value.denom());
    }
    out
}
