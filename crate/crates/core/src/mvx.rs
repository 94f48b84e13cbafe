//! The k-monochromatic vertex-index `mvx_k`.
//!
//! For `n >= 3`, `mvx_n(G) = l(T_max) + 1 = n - γ_c(G) + 1`, where `l(T_max)`
//! is the largest leaf count of a spanning tree and `γ_c` the connected
//! domination number. Graphs with a cut vertex satisfy the same identity for
//! every `k`. Everything else goes through the exact partition search.

use std::collections::VecDeque;

use crate::coloring::{verify_mvx_coloring, vertex_cover_masks, vertex_set_ok, VertexColoring};
use crate::error::{check_k, Error, Result};
use crate::graph::{bit, bits, k_subset_masks, k_subsets, Graph, VertexSubset};
use crate::mx::bfs_tree_edges;
use crate::partition::partitions_with_blocks;
use crate::{Budget, Config};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTreeResult {
    pub edges: Vec<(usize, usize)>,
    pub leaf_count: usize,
}

impl SpanningTreeResult {
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let deg = degrees(n, &edges);
        let leaf_count = deg.iter().filter(|&&d| d == 1).count();
        SpanningTreeResult { edges, leaf_count }
    }

    /// Vertices of degree at least two in the tree.
    pub fn internal_vertices(&self, n: usize) -> VertexSubset {
        let mask = degrees(n, &self.edges)
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d >= 2)
            .fold(0, |m, (v, _)| m | bit(v));
        VertexSubset::from_mask(n, mask).expect("in range")
    }

    /// True iff the edges form a spanning tree of `g`.
    pub fn is_spanning_tree_of(&self, g: &Graph) -> bool {
        if self.edges.len() + 1 != g.n() || !self.edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            return false;
        }
        let t = Graph::from_edges(g.n(), &self.edges);
        t.map(|t| t.is_connected()).unwrap_or(false)
    }
}

fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MvxMethod {
    ExactSearch,
    CutVertex,
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvxResult {
    pub value: usize,
    pub witness: Option<VertexColoring>,
    pub k: usize,
    pub method: MvxMethod,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

pub fn max_leaf_spanning_tree(g: &Graph) -> Result<SpanningTreeResult> {
    max_leaf_spanning_tree_with(g, &Budget::default())
}

/// Exact maximum-leaf spanning tree by enumerating acyclic `(n-1)`-edge
/// subsets. Refuses inputs with `C(m, n-1)` above the budget.
pub fn max_leaf_spanning_tree_with(g: &Graph, budget: &Budget) -> Result<SpanningTreeResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Domain("spanning-tree search needs n >= 2".into()));
    }
    require_connected(g)?;
    let subsets = binomial(g.m() as u64, (n - 1) as u64);
    if subsets > budget.max_tree_subsets as u128 {
        return Err(Error::Budget(format!(
            "C({}, {}) = {subsets} edge subsets exceeds {}; use max_leaf_heuristic",
            g.m(),
            n - 1,
            budget.max_tree_subsets
        )));
    }
    let mut search = TreeSearch {
        edges: g.edges(),
        need: n - 1,
        deg: vec![0; n],
        chosen: Vec::with_capacity(n - 1),
        best: None,
    };
    let comp: Vec<u8> = (0..n as u8).collect();
    search.run(0, &comp);
    let (_, edges) = search.best.expect("connected graphs have a spanning tree");
    Ok(SpanningTreeResult::from_edges(n, edges))
}

struct TreeSearch {
    edges: Vec<(usize, usize)>,
    need: usize,
    deg: Vec<usize>,
    chosen: Vec<(usize, usize)>,
    best: Option<(usize, Vec<(usize, usize)>)>,
}

impl TreeSearch {
    fn run(&mut self, idx: usize, comp: &[u8]) {
        if self.chosen.len() == self.need {
            let leaves = self.deg.iter().filter(|&&d| d == 1).count();
            if self.best.as_ref().is_none_or(|(b, _)| leaves > *b) {
                self.best = Some((leaves, self.chosen.clone()));
            }
            return;
        }
        if self.edges.len() - idx < self.need - self.chosen.len() {
            return;
        }
        let (u, v) = self.edges[idx];
        if comp[u] != comp[v] {
            let (from, to) = (comp[v], comp[u]);
            let merged: Vec<u8> = comp
                .iter()
                .map(|&c| if c == from { to } else { c })
                .collect();
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen.push((u, v));
            self.run(idx + 1, &merged);
            self.chosen.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
        self.run(idx + 1, comp);
    }
}

/// The spanning tree obtained from a connected dominating set `d`: a BFS tree
/// of `G[d]` plus every other vertex hung on its lowest neighbour in `d`.
pub fn tree_from_connected_dominating_set(
    g: &Graph,
    d: &VertexSubset,
) -> Result<SpanningTreeResult> {
    let n = g.n();
    let dm = d.mask();
    if n == 1 {
        return Ok(SpanningTreeResult {
            edges: Vec::new(),
            leaf_count: 0,
        });
    }
    if !g.induces_connected(dm) || !g.dominates(dm) {
        return Err(Error::InvalidCertificate(
            "not a connected dominating set".into(),
        ));
    }
    let mut edges = bfs_tree_edges(g, dm.trailing_zeros() as usize, dm);
    for v in bits(g.vertex_mask() & !dm) {
        let p = (g.row(v) & dm).trailing_zeros() as usize;
        edges.push((p.min(v), p.max(v)));
    }
    edges.sort_unstable();
    Ok(SpanningTreeResult::from_edges(n, edges))
}

/// Greedy witness: grows a connected core from the vertex with the largest
/// closed neighbourhood, each time adding the frontier vertex that dominates
/// the most new vertices (lowest id on ties). Not optimal in general.
pub fn max_leaf_heuristic(g: &Graph) -> Result<SpanningTreeResult> {
    require_connected(g)?;
    let n = g.n();
    if n == 1 {
        return Ok(SpanningTreeResult {
            edges: Vec::new(),
            leaf_count: 0,
        });
    }
    let gain = |v: usize, dominated: u64| (g.row(v) | bit(v)) & !dominated;
    let start = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("n >= 1");
    let mut core = bit(start);
    let mut dominated = g.closed_neighborhood(core);
    while dominated != g.vertex_mask() {
        let frontier = g.closed_neighborhood(core) & !core;
        let pick = bits(frontier)
            .max_by_key(|&v| (gain(v, dominated).count_ones(), std::cmp::Reverse(v)))
            .expect("connected graph has a frontier");
        core |= bit(pick);
        dominated |= gain(pick, dominated);
    }
    tree_from_connected_dominating_set(g, &VertexSubset::from_mask(n, core)?)
}

/// Smallest set (lowest mask among equals) satisfying `pred`, by ascending
/// size.
pub(crate) fn smallest_subset(
    n: usize,
    limit: usize,
    pred: impl Fn(u64) -> bool,
) -> Result<VertexSubset> {
    if n > limit {
        return Err(Error::Budget(format!(
            "subset search over {n} vertices exceeds {limit}"
        )));
    }
    for size in 0..=n {
        if let Some(s) = k_subsets(n, size)?.find(|s| pred(s.mask())) {
            return Ok(s);
        }
    }
    Err(Error::InvalidGraph(
        "no subset satisfies the predicate".into(),
    ))
}

pub fn minimum_connected_dominating_set(g: &Graph) -> Result<VertexSubset> {
    minimum_connected_dominating_set_with(g, &Budget::default())
}

/// `K_1` yields the empty set by convention.
pub fn minimum_connected_dominating_set_with(g: &Graph, budget: &Budget) -> Result<VertexSubset> {
    require_connected(g)?;
    if g.n() == 1 {
        return Ok(VertexSubset::empty(1));
    }
    smallest_subset(g.n(), budget.max_domination_vertices, |s| {
        g.induces_connected(s) && g.dominates(s)
    })
}

pub fn connected_domination_number(g: &Graph) -> Result<usize> {
    Ok(minimum_connected_dominating_set(g)?.len())
}

/// Exact maximum-leaf spanning tree through a minimum connected dominating
/// set; polynomial in `m`, exponential only in `n`.
pub fn max_leaf_tree_via_cds(g: &Graph, budget: &Budget) -> Result<SpanningTreeResult> {
    let d = minimum_connected_dominating_set_with(g, budget)?;
    tree_from_connected_dominating_set(g, &d)
}

/// `l(T_max) + 1` for connected graphs with `n >= 3`.
pub fn mvx_n_formula(g: &Graph) -> Result<usize> {
    if g.n() < 3 {
        return Err(Error::Domain(format!("needs n >= 3, got {}", g.n())));
    }
    Ok(max_leaf_spanning_tree(g)?.leaf_count + 1)
}

pub fn mvx_via_cut_vertex(g: &Graph, k: usize) -> Result<MvxResult> {
    mvx_via_cut_vertex_with(g, k, &Budget::default())
}

/// `l(T_max) + 1` for any `k`, valid when `g` has a cut vertex. The witness
/// gives all internal vertices of a maximum-leaf tree one color and every
/// leaf its own color.
pub fn mvx_via_cut_vertex_with(g: &Graph, k: usize, budget: &Budget) -> Result<MvxResult> {
    require_connected(g)?;
    check_k(k, 2, g.n())?;
    if g.cut_vertices()?.is_empty() {
        return Err(Error::NotApplicable("graph has no cut vertex".into()));
    }
    let tree = max_leaf_tree_via_cds(g, budget)?;
    let internal = tree.internal_vertices(g.n()).mask();
    let mut next = 1;
    let colors: Vec<usize> = (0..g.n())
        .map(|v| {
            if internal & bit(v) != 0 {
                0
            } else {
                next += 1;
                next - 1
            }
        })
        .collect();
    Ok(MvxResult {
        value: tree.leaf_count + 1,
        witness: Some(VertexColoring::new(g, &colors)?),
        k,
        method: MvxMethod::CutVertex,
    })
}

pub fn mvx_exact(g: &Graph, k: usize) -> Result<MvxResult> {
    mvx_exact_with(g, k, &Config::default())
}

/// Largest class count over vertex set partitions forming an MVX_k-coloring.
/// Counts are scanned downward from `min(n, n - diam + 2)`; merging two colors
/// preserves validity, so the first feasible count is the maximum.
pub fn mvx_exact_with(g: &Graph, k: usize, cfg: &Config) -> Result<MvxResult> {
    require_connected(g)?;
    let n = g.n();
    check_k(k, 2, n)?;
    if n > cfg.budget.max_vertices_exact_mvx {
        return Err(Error::Budget(format!(
            "{n} vertices exceeds the partition-search limit of {}",
            cfg.budget.max_vertices_exact_mvx
        )));
    }
    let start = n.min(n + 2 - g.diameter()?);
    let subsets = k_subset_masks(n, k)?;
    for blocks in (1..=start).rev() {
        let parts = partitions_with_blocks(n, blocks);
        let hit = cfg.exec.find_first(&parts, |p| {
            let colors: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            let masks = vertex_cover_masks(g, &colors, blocks);
            subsets.iter().all(|&s| vertex_set_ok(g, &masks, s))
        });
        if let Some(p) = hit {
            let colors: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            return Ok(MvxResult {
                value: blocks,
                witness: Some(VertexColoring::new(g, &colors)?),
                k,
                method: MvxMethod::ExactSearch,
            });
        }
    }
    unreachable!("the one-color partition is always valid on a connected graph")
}

/// `mvc(C_n)`: `n` for `n <= 5`, otherwise 3.
pub fn cycle_mvc_formula(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::Domain(format!("cycles need n >= 3, got {n}")));
    }
    Ok(if n <= 5 { n } else { 3 })
}

/// `mvx_k` of the complement of `C_n` for `n >= 6`.
pub fn complement_cycle_mvx(n: usize, k: usize) -> Result<usize> {
    if n < 6 {
        return Err(Error::Domain(format!("closed form needs n >= 6, got {n}")));
    }
    check_k(k, 3, n)?;
    Ok(if k <= full_range_end(n) { n } else { n - 1 })
}

/// Largest `k` at which the complement of `C_n` keeps all `n` colors.
pub(crate) fn full_range_end(n: usize) -> usize {
    if n % 2 == 1 {
        (n - 1) / 2
    } else if n.is_multiple_of(4) {
        n / 2 - 1
    } else {
        n / 2
    }
}

/// `n - diam(G) + 2`, an upper bound on `mvc(G)` and hence on every `mvx_k`.
pub fn diameter_upper_bound(g: &Graph) -> Result<usize> {
    Ok(g.n() + 2 - g.diameter()?)
}

/// Rebuilds a spanning tree whose internal vertices all carry the color of
/// the cut vertex `v0`, from a valid MVC-coloring.
///
/// Starts from a vertex-monochromatic path through `v0` between two
/// components of `G - v0`, then repeatedly takes the lowest uncovered vertex
/// `s`, a path `P` from `s` to the lowest vertex `t` of another component,
/// and splices in the segments of `P` before its first and after its last
/// vertex in the tree.
pub fn extract_mono_spanning_tree(vc: &VertexColoring, v0: usize) -> Result<SpanningTreeResult> {
    let g = vc.graph();
    let n = g.n();
    if v0 >= n || !g.cut_vertices()?.contains(v0) {
        return Err(Error::NotApplicable(format!(
            "vertex {v0} is not a cut vertex"
        )));
    }
    if !verify_mvx_coloring(vc, 2)? {
        return Err(Error::InvalidColoring("not an MVC-coloring".into()));
    }
    let c = vc.color_of(v0);
    let colored = vc.class(c).mask();
    let rest = g.vertex_mask() & !bit(v0);
    let comps = g.components_within(rest);
    let comp_of = |v: usize| {
        comps
            .iter()
            .position(|&m| m & bit(v) != 0)
            .expect("v != v0")
    };
    let other_than = |i: usize| -> usize {
        let j = (0..comps.len())
            .find(|&j| j != i)
            .expect("cut vertex splits the graph");
        comps[j].trailing_zeros() as usize
    };
    let path_between = |a: usize, b: usize| -> Result<Vec<usize>> {
        internal_colored_path(g, a, b, colored)
            .ok_or_else(|| Error::InvalidColoring(format!("no vertex-monochromatic {a}-{b} path")))
    };

    let a = comps[0].trailing_zeros() as usize;
    let first = path_between(a, other_than(0))?;
    let mut covered_mask = first.iter().fold(0u64, |m, &v| m | bit(v));
    let mut edges: Vec<(usize, usize)> = first
        .windows(2)
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
        .collect();
    while covered_mask != g.vertex_mask() {
        let s = (g.vertex_mask() & !covered_mask).trailing_zeros() as usize;
        let t = other_than(comp_of(s));
        let p = path_between(s, t)?;
        let first_in = p
            .iter()
            .position(|&v| covered_mask & bit(v) != 0)
            .expect("path meets v0");
        let last_in = p
            .iter()
            .rposition(|&v| covered_mask & bit(v) != 0)
            .expect("path meets v0");
        for w in p[..=first_in].windows(2).chain(p[last_in..].windows(2)) {
            edges.push((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in p[..=first_in].iter().chain(&p[last_in..]) {
            covered_mask |= bit(v);
        }
    }
    edges.sort_unstable();
    let tree = SpanningTreeResult::from_edges(n, edges);
    debug_assert!(tree.is_spanning_tree_of(g));
    debug_assert!(tree.internal_vertices(n).mask() & !colored == 0);
    Ok(tree)
}

/// Shortest `a`-`b` path whose internal vertices all lie in `allowed`.
fn internal_colored_path(g: &Graph, a: usize, b: usize, allowed: u64) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut seen = bit(a);
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        if v != a && allowed & bit(v) == 0 {
            continue;
        }
        for w in bits(g.row(v) & !seen) {
            seen |= bit(w);
            prev[w] = v;
            if w == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}
