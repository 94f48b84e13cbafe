//! Edge and vertex colorings and the two monochromatic-tree predicates.
//!
//! An edge coloring is valid for `k` (an MX_k-coloring) when every `k`-set of
//! vertices lies in one monochromatic tree. A vertex coloring is valid for `k`
//! (an MVX_k-coloring) when every `k`-set lies in a tree whose internal
//! vertices share a color.
//!
//! Both predicates reduce to containment tests against a short list of vertex
//! masks computed once per coloring:
//!
//! - edge version: a monochromatic tree containing `S` exists iff `S` lies in
//!   one connected component of a single color class;
//! - vertex version: a tree with internal vertex set `A` and leaf set
//!   `S \ A` exists iff `A` is connected and `S ⊆ N[A]`. `N[A]` only grows
//!   with `A`, so it suffices to test the components of each vertex color
//!   class. Two adjacent vertices are always joined by a single edge, a tree
//!   without internal vertices.

use crate::error::{check_k, Error, Result};
use crate::graph::{bit, bits, k_subset_masks, Graph, VertexSubset};
use crate::partition::canonicalize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    graph: Graph,
    edges: Vec<(usize, usize)>,
    colors: Vec<usize>,
    num_colors: usize,
}

impl EdgeColoring {
    /// `colors[i]` is the color of `graph.edges()[i]`. Color ids are
    /// renumbered densely in order of first appearance.
    pub fn new(graph: &Graph, colors: &[usize]) -> Result<Self> {
        let edges = graph.edges();
        if colors.len() != edges.len() {
            return Err(Error::InvalidColoring(format!(
                "{} colors for {} edges",
                colors.len(),
                edges.len()
            )));
        }
        let colors = canonicalize(colors);
        let num_colors = colors.iter().max().map_or(0, |&c| c + 1);
        Ok(EdgeColoring {
            graph: graph.clone(),
            edges,
            colors,
            num_colors,
        })
    }

    /// Every edge colored 0.
    pub fn monochromatic(graph: &Graph) -> Self {
        Self::new(graph, &vec![0; graph.m()]).expect("length matches")
    }

    /// Every edge its own color.
    pub fn rainbow(graph: &Graph) -> Self {
        Self::new(graph, &(0..graph.m()).collect::<Vec<_>>()).expect("length matches")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.colors[i])
    }

    /// Recolors every edge of color `b` with color `a`.
    pub fn merge_colors(&self, a: usize, b: usize) -> Self {
        let colors: Vec<_> = self
            .colors
            .iter()
            .map(|&c| if c == b { a } else { c })
            .collect();
        Self::new(&self.graph, &colors).expect("length unchanged")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    graph: Graph,
    colors: Vec<usize>,
    num_colors: usize,
}

impl VertexColoring {
    /// `colors[v]` is the color of vertex `v`; ids are renumbered densely.
    pub fn new(graph: &Graph, colors: &[usize]) -> Result<Self> {
        if colors.len() != graph.n() {
            return Err(Error::InvalidColoring(format!(
                "{} colors for {} vertices",
                colors.len(),
                graph.n()
            )));
        }
        let colors = canonicalize(colors);
        let num_colors = colors.iter().max().map_or(0, |&c| c + 1);
        Ok(VertexColoring {
            graph: graph.clone(),
            colors,
            num_colors,
        })
    }

    pub fn rainbow(graph: &Graph) -> Self {
        Self::new(graph, &(0..graph.n()).collect::<Vec<_>>()).expect("length matches")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Vertices of color `c`.
    pub fn class(&self, c: usize) -> VertexSubset {
        let mask = self
            .colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .fold(0u64, |m, (v, _)| m | bit(v));
        VertexSubset::from_mask(self.graph.n(), mask).expect("in range")
    }

    pub fn merge_colors(&self, a: usize, b: usize) -> Self {
        let colors: Vec<_> = self
            .colors
            .iter()
            .map(|&c| if c == b { a } else { c })
            .collect();
        Self::new(&self.graph, &colors).expect("length unchanged")
    }
}

/// The edges of one color class and the vertices they span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorTree {
    pub color: usize,
    pub edges: Vec<(usize, usize)>,
    pub vertices: VertexSubset,
    pub connected: bool,
    pub acyclic: bool,
}

impl ColorTree {
    pub fn is_tree(&self) -> bool {
        self.connected && self.acyclic
    }

    /// A single-edge class.
    pub fn is_trivial(&self) -> bool {
        self.edges.len() == 1
    }
}

/// Adjacency rows of the subgraph formed by the edges of color `c`.
fn class_rows(n: usize, edges: &[(usize, usize)], colors: &[usize], c: usize) -> (Vec<u64>, u64) {
    let mut rows = vec![0u64; n];
    let mut touched = 0u64;
    for (&(u, v), &col) in edges.iter().zip(colors) {
        if col == c {
            rows[u] |= bit(v);
            rows[v] |= bit(u);
            touched |= bit(u) | bit(v);
        }
    }
    (rows, touched)
}

fn components_of_rows(rows: &[u64], within: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = within;
    while rest != 0 {
        let mut seen = rest & rest.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= rows[v];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
        }
        out.push(seen);
        rest &= !seen;
    }
    out
}

pub fn color_classes(ec: &EdgeColoring) -> Vec<ColorTree> {
    let n = ec.graph.n();
    (0..ec.num_colors)
        .map(|c| {
            let edges: Vec<_> = ec
                .edges
                .iter()
                .zip(&ec.colors)
                .filter(|&(_, &col)| col == c)
                .map(|(&e, _)| e)
                .collect();
            let (rows, touched) = class_rows(n, &ec.edges, &ec.colors, c);
            let comps = components_of_rows(&rows, touched).len();
            let nv = touched.count_ones() as usize;
            ColorTree {
                color: c,
                acyclic: edges.len() + comps == nv,
                connected: comps == 1,
                vertices: VertexSubset::from_mask(n, touched).expect("in range"),
                edges,
            }
        })
        .collect()
}

/// Vertex sets of the components of all color classes (edge version).
pub(crate) fn edge_cover_masks(
    n: usize,
    edges: &[(usize, usize)],
    colors: &[usize],
    num_colors: usize,
) -> Vec<u64> {
    let mut out = Vec::with_capacity(num_colors);
    for c in 0..num_colors {
        let (rows, touched) = class_rows(n, edges, colors, c);
        out.extend(components_of_rows(&rows, touched));
    }
    out
}

/// `N[C]` for every component `C` of every vertex color class.
pub(crate) fn vertex_cover_masks(g: &Graph, colors: &[usize], num_colors: usize) -> Vec<u64> {
    let mut classes = vec![0u64; num_colors];
    for (v, &c) in colors.iter().enumerate() {
        classes[c] |= bit(v);
    }
    let mut out = Vec::with_capacity(g.n());
    for class in classes {
        for comp in g.components_within(class) {
            out.push(g.closed_neighborhood(comp));
        }
    }
    out
}

#[inline]
pub(crate) fn covered(masks: &[u64], s: u64) -> bool {
    masks.iter().any(|&m| s & !m == 0)
}

#[inline]
fn adjacent_pair(g: &Graph, s: u64) -> bool {
    s.count_ones() == 2 && {
        let u = s.trailing_zeros() as usize;
        g.row(u) & s != 0
    }
}

/// Vertex version check of one set against precomputed cover masks.
#[inline]
pub(crate) fn vertex_set_ok(g: &Graph, masks: &[u64], s: u64) -> bool {
    s.count_ones() <= 1 || adjacent_pair(g, s) || covered(masks, s)
}

pub fn mono_stree_exists(ec: &EdgeColoring, s: &VertexSubset) -> bool {
    if s.len() <= 1 {
        return true;
    }
    let masks = edge_cover_masks(ec.graph.n(), &ec.edges, &ec.colors, ec.num_colors);
    covered(&masks, s.mask())
}

pub fn vertex_mono_tree_exists(vc: &VertexColoring, s: &VertexSubset) -> bool {
    let masks = vertex_cover_masks(&vc.graph, &vc.colors, vc.num_colors);
    vertex_set_ok(&vc.graph, &masks, s.mask())
}

fn check_verify_args(g: &Graph, k: usize) -> Result<()> {
    check_k(k, 2, g.n())?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

pub fn verify_mx_coloring(ec: &EdgeColoring, k: usize) -> Result<bool> {
    check_verify_args(&ec.graph, k)?;
    let masks = edge_cover_masks(ec.graph.n(), &ec.edges, &ec.colors, ec.num_colors);
    Ok(k_subset_masks(ec.graph.n(), k)?
        .into_iter()
        .all(|s| covered(&masks, s)))
}

pub fn verify_mvx_coloring(vc: &VertexColoring, k: usize) -> Result<bool> {
    check_verify_args(&vc.graph, k)?;
    let masks = vertex_cover_masks(&vc.graph, &vc.colors, vc.num_colors);
    Ok(k_subset_masks(vc.graph.n(), k)?
        .into_iter()
        .all(|s| vertex_set_ok(&vc.graph, &masks, s)))
}

/// Recolors a valid MX_k-coloring so that every color class is a tree.
///
/// Within each class, edges are scanned in index order; an edge closing a
/// cycle (always the highest-indexed edge of that cycle) gets a fresh color,
/// and every component after the first gets a fresh color.
pub fn normalize_to_forest(ec: &EdgeColoring, k: usize) -> Result<EdgeColoring> {
    if !verify_mx_coloring(ec, k)? {
        return Err(Error::InvalidColoring(format!("not an MX_{k}-coloring")));
    }
    let n = ec.graph.n();
    let mut colors = ec.colors.clone();
    let mut fresh = ec.num_colors;
    for c in 0..ec.num_colors {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut kept = Vec::new();
        for (i, &(u, v)) in ec.edges.iter().enumerate() {
            if colors[i] != c {
                continue;
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                colors[i] = fresh;
                fresh += 1;
            } else {
                parent[ru] = rv;
                kept.push(i);
            }
        }
        let mut component_color: Vec<(usize, usize)> = Vec::new();
        for i in kept {
            let r = find(&mut parent, ec.edges[i].0);
            colors[i] = match component_color.iter().find(|(root, _)| *root == r) {
                Some(&(_, col)) => col,
                None => {
                    let col = if component_color.is_empty() { c } else { fresh };
                    if col == fresh {
                        fresh += 1;
                    }
                    component_color.push((r, col));
                    col
                }
            };
        }
    }
    EdgeColoring::new(&ec.graph, &colors)
}
