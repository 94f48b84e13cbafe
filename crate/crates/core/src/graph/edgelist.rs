//! Plain-text edge lists (`n m` header, then `u v` per line) and DOT export.

use std::fmt::Write as _;

use super::{parse_graph6, Graph};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, reason: String| Error::EdgeList { line, reason };
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace();
        let a = it.next().and_then(|t| t.parse().ok());
        let b = it.next().and_then(|t| t.parse().ok());
        match (a, b, it.next()) {
            (Some(a), Some(b), None) => Ok((a, b)),
            _ => Err(err(line, format!("expected two integers, found {l:?}"))),
        }
    };
    let (hline, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines.by_ref().take(m) {
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, format!("edge {u} {v} outside 0..{n}")));
        }
        if u == v {
            return Err(err(line, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            hline,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, "trailing content after the last edge".into()));
    }
    let g = Graph::from_edges(n, &edges)?;
    if g.m() != m {
        return Err(err(hline, "duplicate edges".into()));
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Edge list if the first non-blank character is a digit, graph6 otherwise.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
        parse_edge_list(text)
    } else {
        parse_graph6(trimmed.lines().next().unwrap_or(""))
    }
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
