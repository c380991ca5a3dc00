//! Plain-text edge list format.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, 0-indexed)
//! ```
//!
//! The writer emits no comments and lists edges with `u < v` in
//! lexicographic order, so output is byte-stable.

use std::fmt::Write as _;

use super::{Graph, GraphError};

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse { line, msg: msg.into() }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| parse_err(line_no, "expected two integers"))?;
        tok.parse().map_err(|_| parse_err(line_no, format!("not a non-negative integer: {tok:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(line_no, "trailing tokens"));
    }
    Ok(pair)
}

pub fn read_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut pairs = Vec::with_capacity(m);
    for (line_no, line) in lines {
        pairs.push(parse_pair(line_no, line)?);
    }
    if pairs.len() != m {
        return Err(parse_err(hline, format!("header declares {m} edges, found {}", pairs.len())));
    }
    Graph::from_edge_list(n, &pairs)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
