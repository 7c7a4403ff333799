//! Vertex label grammar. Compact forms are shell-friendly (`x5`, `x5^2`);
//! pretty forms match the usual typeset notation (`x_5`, `x_5^(2)`). The
//! parser accepts both, plus the caret form with parenthesized copy, so any
//! label this crate prints can be fed back in.

use crate::error::{Error, Result};

/// A parsed label: base index `t`, and the copy number for prism labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParsedLabel {
    pub t: usize,
    pub copy: Option<usize>,
}

fn parse_positive(digits: &str, label: &str) -> Result<usize> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::domain(format!("malformed vertex label '{label}'")));
    }
    let value: usize = digits
        .parse()
        .map_err(|_| Error::domain(format!("vertex label '{label}' is out of numeric range")))?;
    if value == 0 {
        return Err(Error::domain(format!(
            "vertex label '{label}' uses index 0; indices start at 1"
        )));
    }
    Ok(value)
}

/// Parses `x<t>`, `x<t>^<r>`, or `x<t>^(<r>)`, each optionally with an
/// underscore after the x.
pub fn parse_label(s: &str) -> Result<ParsedLabel> {
    let trimmed = s.trim();
    let rest = trimmed
        .strip_prefix('x')
        .ok_or_else(|| Error::domain(format!("malformed vertex label '{trimmed}'")))?;
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    match rest.split_once('^') {
        None => Ok(ParsedLabel {
            t: parse_positive(rest, trimmed)?,
            copy: None,
        }),
        Some((t_part, copy_part)) => {
            let copy_digits = match copy_part.strip_prefix('(') {
                Some(inner) => inner.strip_suffix(')').ok_or_else(|| {
                    Error::domain(format!("malformed vertex label '{trimmed}'"))
                })?,
                None if copy_part.ends_with(')') => {
                    return Err(Error::domain(format!("malformed vertex label '{trimmed}'")))
                }
                None => copy_part,
            };
            Ok(ParsedLabel {
                t: parse_positive(t_part, trimmed)?,
                copy: Some(parse_positive(copy_digits, trimmed)?),
            })
        }
    }
}

/// Parses a comma-separated label list; blanks around commas are fine, empty
/// components are not.
pub fn parse_label_list(s: &str) -> Result<Vec<ParsedLabel>> {
    if s.trim().is_empty() {
        return Err(Error::domain("empty vertex set"));
    }
    s.split(',').map(parse_label).collect()
}

/// Global index of a label on a graph of `copies` stacked blocks of
/// `per_copy` vertices (a cylinder is the single-copy case). Copy-free labels
/// address the global range directly; on one copy the two readings coincide.
pub fn global_index(label: ParsedLabel, per_copy: usize, copies: usize) -> Result<usize> {
    let total = per_copy * copies;
    match label.copy {
        None => {
            if label.t > total {
                return Err(Error::VertexOutOfRange {
                    index: label.t,
                    vertex_count: total,
                });
            }
            Ok(label.t)
        }
        Some(copy) => {
            if copy > copies {
                return Err(Error::domain(format!(
                    "label copy {copy} outside 1..={copies}"
                )));
            }
            if label.t > per_copy {
                return Err(Error::VertexOutOfRange {
                    index: label.t,
                    vertex_count: per_copy,
                });
            }
            Ok((copy - 1) * per_copy + label.t)
        }
    }
}

/// Splits a global index into (t, copy), both 1-based.
pub fn split_global(global: usize, per_copy: usize) -> Result<(usize, usize)> {
    if global == 0 || per_copy == 0 {
        return Err(Error::domain("global index and copy size must be positive"));
    }
    Ok(((global - 1) % per_copy + 1, (global - 1) / per_copy + 1))
}

/// `x5`
pub fn compact_cylinder_label(t: usize) -> String {
    format!("x{t}")
}

/// `x_5`
pub fn pretty_cylinder_label(t: usize) -> String {
    format!("x_{t}")
}

/// `x5^2` from a global prism index.
pub fn compact_prism_label(global: usize, per_copy: usize) -> Result<String> {
    let (t, copy) = split_global(global, per_copy)?;
    Ok(format!("x{t}^{copy}"))
}

/// `x_5^(2)` from a global prism index.
pub fn pretty_prism_label(global: usize, per_copy: usize) -> Result<String> {
    let (t, copy) = split_global(global, per_copy)?;
    Ok(format!("x_{t}^({copy})"))
}
