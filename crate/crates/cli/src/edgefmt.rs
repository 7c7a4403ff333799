//! The plain-text edge-list interchange format, and its parser so emitted
//! graphs can be re-ingested and checked for round-trip fidelity.
//!
//! ```text
//! family cylinder n=4 k=3
//! vertices 12
//! edges 20
//! 1 2
//! …
//! ```

use prismdim_core::{Error, FamilyTag, LabeledGraph, Result};

use crate::family::FamilySpec;

/// Renders a graph in the edge-list format; edge lines are ascending pairs.
pub fn render(spec: &FamilySpec, graph: &LabeledGraph) -> String {
    let mut lines = Vec::with_capacity(graph.edge_count() + 3);
    let params: Vec<String> = spec
        .parameters()
        .iter()
        .map(|(name, value)| format!("{name}={value}"))
        .collect();
    lines.push(format!("family {} {}", spec.family_name(), params.join(" ")));
    lines.push(format!("vertices {}", graph.vertex_count()));
    lines.push(format!("edges {}", graph.edge_count()));
    for (u, v) in graph.edges() {
        lines.push(format!("{} {}", u.index(), v.index()));
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

fn malformed(line_no: usize, why: &str) -> Error {
    Error::Domain(format!("edge list line {line_no}: {why}"))
}

/// Parses the edge-list format back into a labeled graph (family tag
/// reconstructed from the header, adjacency from the edge lines).
pub fn parse(input: &str) -> Result<(FamilySpec, LabeledGraph)> {
    let mut lines = input.lines().enumerate();

    let (no, header) = lines
        .next()
        .ok_or_else(|| Error::Domain("empty edge list".into()))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("family") {
        return Err(malformed(no + 1, "expected 'family <name> <params>'"));
    }
    let name = tokens
        .next()
        .ok_or_else(|| malformed(no + 1, "missing family name"))?;
    let (mut n, mut k, mut m) = (None, None, None);
    for token in tokens {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| malformed(no + 1, "parameters must look like n=4"))?;
        let value: usize = value
            .parse()
            .map_err(|_| malformed(no + 1, "parameter values must be integers"))?;
        match key {
            "n" => n = Some(value),
            "k" => k = Some(value),
            "m" => m = Some(value),
            other => return Err(malformed(no + 1, &format!("unknown parameter '{other}'"))),
        }
    }
    let spec = FamilySpec::assemble(name.parse()?, n, k, m)?;

    let expect_count = |entry: Option<(usize, &str)>, keyword: &str| -> Result<usize> {
        let (no, line) = entry.ok_or_else(|| Error::Domain("truncated edge list".into()))?;
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            [word, count] if *word == keyword => count
                .parse()
                .map_err(|_| malformed(no + 1, "count must be an integer")),
            _ => Err(malformed(no + 1, &format!("expected '{keyword} <count>'"))),
        }
    };
    let vertex_count = expect_count(lines.next(), "vertices")?;
    let edge_count = expect_count(lines.next(), "edges")?;

    let mut edges = Vec::with_capacity(edge_count);
    for (no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(malformed(no + 1, "expected 'u v'")),
        };
        let parse = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| malformed(no + 1, "vertex indices must be integers"))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    if edges.len() != edge_count {
        return Err(Error::Domain(format!(
            "edge list declares {edge_count} edges but contains {}",
            edges.len()
        )));
    }

    let tag = match spec {
        FamilySpec::Cycle { n } => FamilyTag::Cycle { n },
        FamilySpec::Path { k } => FamilyTag::Path { k },
        FamilySpec::Cylinder { n, k } => FamilyTag::Cylinder { n, k },
        FamilySpec::Prism { n, k, m } => FamilyTag::Prism { n, k, m },
    };
    let graph = LabeledGraph::from_edges(vertex_count, &edges, tag)?;
    Ok((spec, graph))
}
