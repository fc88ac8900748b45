//! Edge-list text format.
//!
//! Line 1 holds `n m`; the next `m` significant lines hold one edge `i j`
//! each with 0-based endpoints. Lines starting with `#` are comments and
//! blank lines are ignored. Duplicate edges are tolerated (deduplicated with
//! a warning); self-loops are rejected.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: malformed header, expected \"n m\"")]
    BadHeader { line: usize },
    #[error("line {line}: malformed edge, expected two vertex indices")]
    BadEdge { line: usize },
    #[error("line {line}: self-loop {v} {v} rejected")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for n={order}")]
    OutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("header declares {expected} edges but the file lists {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("n={n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
}

/// A parsed graph plus non-fatal warnings (currently only duplicate edges).
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, EdgeListError> {
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = significant.next().ok_or(EdgeListError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    let n: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader { line: header_line })?;
    let m: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader { line: header_line })?;
    if tokens.next().is_some() {
        return Err(EdgeListError::BadHeader { line: header_line });
    }
    if n > MAX_VERTICES {
        return Err(EdgeListError::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut warnings = Vec::new();
    let mut found = 0usize;
    for (line, raw) in significant {
        found += 1;
        let mut tokens = raw.split_whitespace();
        let a: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::BadEdge { line })?;
        let b: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::BadEdge { line })?;
        if tokens.next().is_some() {
            return Err(EdgeListError::BadEdge { line });
        }
        if a == b {
            return Err(EdgeListError::SelfLoop { line, v: a });
        }
        for v in [a, b] {
            if v >= n {
                return Err(EdgeListError::OutOfRange {
                    line,
                    vertex: v,
                    order: n,
                });
            }
        }
        let e = (a.min(b), a.max(b));
        if edges.contains(&e) {
            warnings.push(format!(
                "line {line}: duplicate edge {} {} ignored",
                e.0, e.1
            ));
        } else {
            edges.push(e);
        }
    }
    if found != m {
        return Err(EdgeListError::EdgeCountMismatch { expected: m, found });
    }

    let graph = Graph::from_edges(n, edges).map_err(|e| match e {
        // from_edges re-checks what the loop above already validated
        GraphError::TooManyVertices { n, max } => EdgeListError::TooLarge { n, max },
        _ => unreachable!("edges validated during parsing"),
    })?;
    Ok(ParsedGraph { graph, warnings })
}

/// Serializes a graph in the same format `parse_edge_list` reads.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (a, b) in edges {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
