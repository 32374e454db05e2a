//! The edge-list text format, the only graph file format in this crate.
//!
//! ```text
//! # comments run to end of line
//! n 5
//! 0 1
//! 0 2
//! ```
//!
//! The first non-comment line is `n <count>`; every following non-comment
//! line is one edge `<u> <v>` with `0 <= u,v < count`, `u != v`. Duplicate
//! edges in either orientation are errors. Isolated vertices exist purely
//! through the header count. [`serialize`] emits the canonical form: header
//! first, then edges as `(min,max)` pairs in ascending order.

use crate::graph::{Graph, GraphError, MAX_ORDER};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.kind)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected header \"n <count>\", found {0:?}")]
    MalformedHeader(String),
    #[error("missing \"n <count>\" header")]
    MissingHeader,
    #[error("vertex count {0} exceeds the supported maximum of {MAX_ORDER}")]
    CountTooLarge(usize),
    #[error("expected edge \"<u> <v>\", found {0:?}")]
    MalformedEdge(String),
    #[error("{0}")]
    BadEdge(GraphError),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses the edge-list format, reporting the offending 1-based line on error.
pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        match graph {
            None => {
                let mut parts = content.split_whitespace();
                let tag = parts.next().unwrap_or_default();
                let count = parts.next().and_then(|s| s.parse::<usize>().ok());
                match (tag, count, parts.next()) {
                    ("n", Some(c), None) => {
                        if c > MAX_ORDER {
                            return Err(err(lineno, ParseErrorKind::CountTooLarge(c)));
                        }
                        graph = Some(Graph::empty(c).expect("count checked"));
                    }
                    _ => {
                        return Err(err(
                            lineno,
                            ParseErrorKind::MalformedHeader(content.to_string()),
                        ))
                    }
                }
            }
            Some(ref mut g) => {
                let mut parts = content.split_whitespace();
                let u = parts.next().and_then(|s| s.parse::<usize>().ok());
                let v = parts.next().and_then(|s| s.parse::<usize>().ok());
                match (u, v, parts.next()) {
                    (Some(u), Some(v), None) => g
                        .add_edge_checked(u, v)
                        .map_err(|e| err(lineno, ParseErrorKind::BadEdge(e)))?,
                    _ => {
                        return Err(err(
                            lineno,
                            ParseErrorKind::MalformedEdge(content.to_string()),
                        ))
                    }
                }
            }
        }
    }
    graph.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))
}

/// Canonical text form: `parse(serialize(g)) == g` for every graph.
pub fn serialize(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    let edges = g.edges();
    for (i, (u, v)) in edges.iter().enumerate() {
        out.push_str(&format!("{u} {v}"));
        if i + 1 < edges.len() {
            out.push('\n');
        }
    }
    out
}
