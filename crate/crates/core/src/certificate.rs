//! Plain-text certificate files.
//!
//! A coloring certificate:
//!
//! ```text
//! type: edge
//! graph6: C~
//! coloring:
//! 0 1 -> 0
//! 0 2 -> 1
//! ```
//!
//! Vertex certificates use `type: vertex` and lines `v -> c`. A domination
//! certificate file holds blocks of `graph6:`, `kind:` and `vertices:` lines
//! separated by blank lines. `#` starts a comment line.

use std::fmt::Write as _;

use crate::coloring::{EdgeColoring, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, to_graph6, Graph, VertexSubset};
use crate::reduction::{DominationCertificate, DominationKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringCertificate {
    Edge(EdgeColoring),
    Vertex(VertexColoring),
}

impl ColoringCertificate {
    pub fn graph(&self) -> &Graph {
        match self {
            ColoringCertificate::Edge(ec) => ec.graph(),
            ColoringCertificate::Vertex(vc) => vc.graph(),
        }
    }

    pub fn num_colors(&self) -> usize {
        match self {
            ColoringCertificate::Edge(ec) => ec.num_colors(),
            ColoringCertificate::Vertex(vc) => vc.num_colors(),
        }
    }
}

fn cert_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Certificate {
        line,
        reason: reason.into(),
    }
}

/// Non-empty, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn key_value<'a>(line: usize, text: &'a str, key: &str) -> Result<&'a str> {
    let (k, v) = text
        .split_once(':')
        .ok_or_else(|| cert_err(line, format!("expected `{key}:`")))?;
    if k.trim() != key {
        return Err(cert_err(
            line,
            format!("expected `{key}:`, found `{}:`", k.trim()),
        ));
    }
    Ok(v.trim())
}

fn parse_usize(line: usize, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| cert_err(line, format!("`{s}` is not a non-negative integer")))
}

fn graph_from(line: usize, g6: &str) -> Result<Graph> {
    parse_graph6(g6).map_err(|e| cert_err(line, format!("bad graph6: {e}")))
}

pub fn render_edge_coloring(ec: &EdgeColoring) -> Result<String> {
    let mut out = format!(
        "type: edge\ngraph6: {}\ncoloring:\n",
        to_graph6(ec.graph())?
    );
    for (&(u, v), c) in ec.edges().iter().zip(ec.colors()) {
        let _ = writeln!(out, "{u} {v} -> {c}");
    }
    Ok(out)
}

pub fn render_vertex_coloring(vc: &VertexColoring) -> Result<String> {
    let mut out = format!(
        "type: vertex\ngraph6: {}\ncoloring:\n",
        to_graph6(vc.graph())?
    );
    for (v, c) in vc.colors().iter().enumerate() {
        let _ = writeln!(out, "{v} -> {c}");
    }
    Ok(out)
}

pub fn render_coloring(cert: &ColoringCertificate) -> Result<String> {
    match cert {
        ColoringCertificate::Edge(ec) => render_edge_coloring(ec),
        ColoringCertificate::Vertex(vc) => render_vertex_coloring(vc),
    }
}

/// Parses a coloring certificate. Every edge (or vertex) must be listed
/// exactly once; color ids are relabelled by first appearance.
pub fn parse_coloring(text: &str) -> Result<ColoringCertificate> {
    let mut lines = content_lines(text);
    let (l1, t) = lines
        .next()
        .ok_or_else(|| cert_err(1, "empty certificate"))?;
    let kind = key_value(l1, t, "type")?;
    let (l2, t) = lines
        .next()
        .ok_or_else(|| cert_err(l1, "missing `graph6:` line"))?;
    let g = graph_from(l2, key_value(l2, t, "graph6")?)?;
    let (l3, t) = lines
        .next()
        .ok_or_else(|| cert_err(l2, "missing `coloring:` line"))?;
    if !key_value(l3, t, "coloring")?.is_empty() {
        return Err(cert_err(
            l3,
            "assignments start on the line after `coloring:`",
        ));
    }
    let mut last = l3;
    match kind {
        "edge" => {
            let edges = g.edges();
            let mut colors: Vec<Option<usize>> = vec![None; edges.len()];
            for (ln, t) in lines {
                last = ln;
                let (lhs, rhs) = t
                    .split_once("->")
                    .ok_or_else(|| cert_err(ln, "expected `u v -> c`"))?;
                let ends: Vec<&str> = lhs.split_whitespace().collect();
                if ends.len() != 2 {
                    return Err(cert_err(ln, "expected two endpoints"));
                }
                let (a, b) = (parse_usize(ln, ends[0])?, parse_usize(ln, ends[1])?);
                let key = (a.min(b), a.max(b));
                let idx = edges
                    .binary_search(&key)
                    .map_err(|_| cert_err(ln, format!("{a} {b} is not an edge")))?;
                if colors[idx].is_some() {
                    return Err(cert_err(ln, format!("edge {a} {b} colored twice")));
                }
                colors[idx] = Some(parse_usize(ln, rhs.trim())?);
            }
            if let Some(i) = colors.iter().position(Option::is_none) {
                let (u, v) = edges[i];
                return Err(cert_err(last, format!("edge {u} {v} has no color")));
            }
            let colors: Vec<usize> = colors.into_iter().flatten().collect();
            Ok(ColoringCertificate::Edge(EdgeColoring::new(&g, &colors)?))
        }
        "vertex" => {
            let mut colors: Vec<Option<usize>> = vec![None; g.n()];
            for (ln, t) in lines {
                last = ln;
                let (lhs, rhs) = t
                    .split_once("->")
                    .ok_or_else(|| cert_err(ln, "expected `v -> c`"))?;
                let v = parse_usize(ln, lhs.trim())?;
                let slot = colors
                    .get_mut(v)
                    .ok_or_else(|| cert_err(ln, format!("vertex {v} out of range")))?;
                if slot.is_some() {
                    return Err(cert_err(ln, format!("vertex {v} colored twice")));
                }
                *slot = Some(parse_usize(ln, rhs.trim())?);
            }
            if let Some(v) = colors.iter().position(Option::is_none) {
                return Err(cert_err(last, format!("vertex {v} has no color")));
            }
            let colors: Vec<usize> = colors.into_iter().flatten().collect();
            Ok(ColoringCertificate::Vertex(VertexColoring::new(
                &g, &colors,
            )?))
        }
        other => Err(cert_err(l1, format!("unknown type `{other}`"))),
    }
}

pub fn render_domination(g: &Graph, certs: &[DominationCertificate]) -> Result<String> {
    render_domination_blocks(&certs.iter().map(|c| (g.clone(), *c)).collect::<Vec<_>>())
}

/// One block per `(graph, certificate)`.
pub fn render_domination_blocks(blocks: &[(Graph, DominationCertificate)]) -> Result<String> {
    let mut out = String::new();
    for (i, (g, c)) in blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(
            out,
            "graph6: {}\nkind: {}\nvertices: {}",
            to_graph6(g)?,
            c.kind,
            vs.join(" ")
        );
    }
    Ok(out)
}

/// Parses blocks separated by blank lines.
pub fn parse_domination(text: &str) -> Result<Vec<(Graph, DominationCertificate)>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.starts_with('#') {
            continue;
        }
        if t.is_empty() {
            if !blocks.last().is_some_and(Vec::is_empty) {
                blocks.push(Vec::new());
            }
            continue;
        }
        blocks.last_mut().expect("non-empty").push((i + 1, t));
    }
    blocks.retain(|b| !b.is_empty());
    if blocks.is_empty() {
        return Err(cert_err(1, "no certificate blocks"));
    }
    blocks
        .into_iter()
        .map(|b| {
            if b.len() != 3 {
                return Err(cert_err(
                    b[0].0,
                    "a block needs graph6, kind and vertices lines",
                ));
            }
            let g = graph_from(b[0].0, key_value(b[0].0, b[0].1, "graph6")?)?;
            let kind: DominationKind = key_value(b[1].0, b[1].1, "kind")?
                .parse()
                .map_err(|e: Error| cert_err(b[1].0, e.to_string()))?;
            let vs = key_value(b[2].0, b[2].1, "vertices")?
                .split_whitespace()
                .map(|s| parse_usize(b[2].0, s))
                .collect::<Result<Vec<_>>>()?;
            let set = VertexSubset::from_vertices(g.n(), &vs)
                .map_err(|e| cert_err(b[2].0, e.to_string()))?;
            Ok((g, DominationCertificate::new(set, kind)))
        })
        .collect()
}
