//! The k-monochromatic index `mx_k`: closed form, extremal construction,
//! simplification of colorings, and an exhaustive partition search.

use std::collections::VecDeque;

use crate::coloring::{
    color_classes, covered, edge_cover_masks, normalize_to_forest, verify_mx_coloring, ColorTree,
    EdgeColoring,
};
use crate::error::{check_k, Error, Result};
use crate::graph::{bit, bits, k_subset_masks, Graph};
use crate::partition::partitions_with_blocks;
use crate::Config;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MxResult {
    pub value: usize,
    pub witness: EdgeColoring,
    pub k: usize,
}

/// `m - n + 2`, valid for connected graphs and `3 <= k <= n`.
pub fn mx_k_formula(g: &Graph, k: usize) -> Result<usize> {
    if g.n() < 3 {
        return Err(Error::Domain(format!(
            "closed form needs n >= 3, got n = {}",
            g.n()
        )));
    }
    if k < 3 {
        return Err(Error::Domain(
            "closed form holds only for k >= 3; use the exact search for k = 2".into(),
        ));
    }
    check_k(k, 3, g.n())?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.m() + 2 - g.n())
}

/// Edges of the BFS tree from vertex 0, each as `(parent, child)` sorted.
pub(crate) fn bfs_tree_edges(g: &Graph, root: usize, within: u64) -> Vec<(usize, usize)> {
    let mut seen = bit(root);
    let mut queue = VecDeque::from([root]);
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        for w in bits(g.row(v) & within & !seen) {
            seen |= bit(w);
            out.push((v.min(w), v.max(w)));
            queue.push_back(w);
        }
    }
    out
}

/// A BFS spanning tree from vertex 0 in color 0 and every other edge in its
/// own color: `m - n + 2` colors in total.
pub fn construct_extremal_mx(g: &Graph) -> Result<EdgeColoring> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tree = bfs_tree_edges(g, 0, g.vertex_mask());
    let mut next = 1;
    let colors: Vec<usize> = g
        .edges()
        .iter()
        .map(|e| {
            if tree.contains(e) {
                0
            } else {
                next += 1;
                next - 1
            }
        })
        .collect();
    EdgeColoring::new(g, &colors)
}

fn nontrivial_overlap(a: &ColorTree, b: &ColorTree) -> usize {
    (a.vertices.mask() & b.vertices.mask()).count_ones() as usize
}

/// True when all classes are trees and any two nontrivial ones share at
/// most one vertex.
pub fn is_simple(ec: &EdgeColoring) -> bool {
    let classes = color_classes(ec);
    if !classes.iter().all(ColorTree::is_tree) {
        return false;
    }
    first_overlapping_pair(&classes).is_none()
}

fn first_overlapping_pair(classes: &[ColorTree]) -> Option<(usize, usize)> {
    let nontrivial: Vec<&ColorTree> = classes.iter().filter(|t| t.edges.len() >= 2).collect();
    for (i, a) in nontrivial.iter().enumerate() {
        for b in &nontrivial[i + 1..] {
            if nontrivial_overlap(a, b) >= 2 {
                return Some((a.color, b.color));
            }
        }
    }
    None
}

/// One exchange step on color trees `c` and `d` sharing `p >= 2` vertices:
/// a spanning tree of their union keeps color `c`, and each of the `p - 1`
/// remaining edges of the union gets its own new color. The color count
/// changes by `p - 2`.
pub fn resolve_overlap(ec: &EdgeColoring, c: usize, d: usize) -> Result<EdgeColoring> {
    if c == d || c >= ec.num_colors() || d >= ec.num_colors() {
        return Err(Error::InvalidColoring(format!(
            "colors {c} and {d} are not two classes"
        )));
    }
    let g = ec.graph();
    let union: Vec<usize> = (0..ec.edges().len())
        .filter(|&i| ec.colors()[i] == c || ec.colors()[i] == d)
        .collect();
    let mut rows = vec![0u64; g.n()];
    let mut span = 0u64;
    for &i in &union {
        let (u, v) = ec.edges()[i];
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        span |= bit(u) | bit(v);
    }
    let h = Graph::from_rows(g.n(), rows)?;
    let root = span.trailing_zeros() as usize;
    let tree = bfs_tree_edges(&h, root, span);
    if tree.len() + 1 != span.count_ones() as usize {
        return Err(Error::InvalidColoring(format!(
            "classes {c} and {d} do not meet"
        )));
    }
    let mut colors = ec.colors().to_vec();
    let mut fresh = ec.num_colors();
    for i in union {
        if tree.contains(&ec.edges()[i]) {
            colors[i] = c;
        } else {
            colors[i] = fresh;
            fresh += 1;
        }
    }
    EdgeColoring::new(g, &colors)
}

/// Repeats [`resolve_overlap`] on the first overlapping pair of nontrivial
/// color trees until none remains.
///
/// Each step raises `(num_colors, trivial color count)` lexicographically,
/// and both are at most `m`, so the loop terminates.
pub fn simplify_coloring(ec: &EdgeColoring, k: usize) -> Result<EdgeColoring> {
    if !verify_mx_coloring(ec, k)? {
        return Err(Error::InvalidColoring(format!("not an MX_{k}-coloring")));
    }
    if !color_classes(ec).iter().all(ColorTree::is_tree) {
        return Err(Error::InvalidColoring(
            "every color class must be a tree; normalize first".into(),
        ));
    }
    let mut cur = ec.clone();
    loop {
        let classes = color_classes(&cur);
        let Some((c, d)) = first_overlapping_pair(&classes) else {
            break;
        };
        cur = resolve_overlap(&cur, c, d)?;
    }
    if !verify_mx_coloring(&cur, k)? {
        return Err(Error::InvalidColoring(
            "simplification lost validity".into(),
        ));
    }
    Ok(cur)
}

/// Normalizes then simplifies.
pub fn simplify_any(ec: &EdgeColoring, k: usize) -> Result<EdgeColoring> {
    simplify_coloring(&normalize_to_forest(ec, k)?, k)
}

pub fn mx_exact_bruteforce(g: &Graph, k: usize) -> Result<MxResult> {
    mx_exact_bruteforce_with(g, k, &Config::default())
}

/// Largest number of classes over all set partitions of `E(G)` forming an
/// MX_k-coloring. Scans class counts downward; validity is preserved by
/// merging colors, so the first feasible count is the maximum.
pub fn mx_exact_bruteforce_with(g: &Graph, k: usize, cfg: &Config) -> Result<MxResult> {
    check_k(k, 2, g.n())?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.m();
    if m > cfg.budget.max_edges_exact_mx {
        return Err(Error::Budget(format!(
            "{m} edges exceeds the partition-search limit of {}",
            cfg.budget.max_edges_exact_mx
        )));
    }
    let n = g.n();
    let edges = g.edges();
    let subsets = k_subset_masks(n, k)?;
    for blocks in (1..=m).rev() {
        let parts = partitions_with_blocks(m, blocks);
        let hit = cfg.exec.find_first(&parts, |p| {
            let colors: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            let masks = edge_cover_masks(n, &edges, &colors, blocks);
            subsets.iter().all(|&s| covered(&masks, s))
        });
        if let Some(p) = hit {
            let colors: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            return Ok(MxResult {
                value: blocks,
                witness: EdgeColoring::new(g, &colors)?,
                k,
            });
        }
    }
    Err(Error::InvalidGraph("graph has no edges".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_examples() {
        assert_eq!(mx_k_formula(&Graph::path(6).unwrap(), 4).unwrap(), 1);
        assert_eq!(mx_k_formula(&Graph::cycle(5).unwrap(), 3).unwrap(), 2);
        assert_eq!(mx_k_formula(&Graph::complete(4).unwrap(), 3).unwrap(), 4);
        assert!(matches!(
            mx_k_formula(&Graph::cycle(5).unwrap(), 2),
            Err(Error::Domain(_))
        ));
        assert!(mx_k_formula(&Graph::cycle(5).unwrap(), 6).is_err());
    }

    #[test]
    fn construction_examples() {
        let p4 = construct_extremal_mx(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(p4.num_colors(), 1);
        let c5 = construct_extremal_mx(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.num_colors(), 2);
        let k4 = Graph::complete(4).unwrap();
        let ec = construct_extremal_mx(&k4).unwrap();
        assert_eq!(ec.num_colors(), 4);
        assert!(verify_mx_coloring(&ec, 3).unwrap());
        assert!(verify_mx_coloring(&ec, 4).unwrap());
        assert!(is_simple(&ec));
        assert_eq!(simplify_coloring(&ec, 3).unwrap(), ec);
    }

    #[test]
    fn overlap_step_with_two_shared_vertices() {
        // K_4 edges: 01 02 03 12 13 23 ; classes {01,12} and {02,23} share {0,2}
        let k4 = Graph::complete(4).unwrap();
        let ec = EdgeColoring::new(&k4, &[0, 1, 2, 0, 3, 1]).unwrap();
        let classes = color_classes(&ec);
        assert_eq!(nontrivial_overlap(&classes[0], &classes[1]), 2);
        let trivial = |e: &EdgeColoring| color_classes(e).iter().filter(|t| t.is_trivial()).count();
        let out = resolve_overlap(&ec, 0, 1).unwrap();
        assert_eq!(out.num_colors(), ec.num_colors());
        assert_eq!(trivial(&out), trivial(&ec) + 1);
        assert!(color_classes(&out).iter().all(ColorTree::is_tree));
    }

    #[test]
    fn simplify_with_three_shared_vertices_adds_colors() {
        // K_4: spanning path 0-1-2-3 (01 12 23) and the star {02, 03}
        let k4 = Graph::complete(4).unwrap();
        let ec = EdgeColoring::new(&k4, &[0, 1, 1, 0, 2, 0]).unwrap();
        assert!(verify_mx_coloring(&ec, 3).unwrap());
        let out = simplify_coloring(&ec, 3).unwrap();
        assert!(out.num_colors() > ec.num_colors());
        assert!(is_simple(&out));
        assert!(verify_mx_coloring(&out, 3).unwrap());
    }

    #[test]
    fn simplify_rejects_bad_input() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(simplify_coloring(&EdgeColoring::rainbow(&c5), 3).is_err());
        assert!(simplify_coloring(&EdgeColoring::monochromatic(&c5), 3).is_err());
        assert!(simplify_any(&EdgeColoring::monochromatic(&c5), 3).is_ok());
    }

    #[test]
    fn exact_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = mx_exact_bruteforce(&c5, 3).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.num_colors(), 2);
        assert!(verify_mx_coloring(&r.witness, 3).unwrap());
        assert_eq!(
            mx_exact_bruteforce(&Graph::star(4).unwrap(), 2)
                .unwrap()
                .value,
            1
        );
        let c4 = Graph::cycle(4).unwrap();
        assert!(mx_exact_bruteforce(&c4, 2).unwrap().value >= 2);
        assert!(matches!(
            mx_exact_bruteforce(&Graph::complete(5).unwrap().complement().complement(), 3),
            Ok(MxResult { value: 7, .. })
        ));
        assert!(matches!(
            mx_exact_bruteforce(&Graph::complete(6).unwrap(), 3),
            Err(Error::Budget(_))
        ));
    }
}
