//! Brute-force oracles used by the integration and acceptance tests. They
//! work from edge lists and plain loops only, without the library's solvers.
#![allow(dead_code)]

use mono_index::Graph;

pub fn popcount(x: u64) -> usize {
    x.count_ones() as usize
}

/// Connectivity of the edge subset `sel` (indices into `edges`) on the
/// vertices it touches, via union-find.
fn forest_info(edges: &[(usize, usize)], sel: u64) -> Option<u64> {
    let mut parent: Vec<usize> = (0..64).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut verts = 0u64;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if sel >> i & 1 == 0 {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return None;
        }
        parent[a] = b;
        verts |= 1 << u | 1 << v;
    }
    Some(verts)
}

/// Every tree with at least one edge as `(vertex mask, internal mask)`.
pub fn all_subtrees(g: &Graph) -> Vec<(u64, u64)> {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 24, "oracle limited to small graphs");
    let mut out = Vec::new();
    for sel in 1u64..(1 << m) {
        let Some(verts) = forest_info(&edges, sel) else {
            continue;
        };
        if popcount(verts) != popcount(sel) + 1 {
            continue;
        }
        let mut deg = [0usize; 64];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if sel >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let internal = (0..g.n())
            .filter(|&v| deg[v] >= 2)
            .fold(0u64, |a, v| a | 1 << v);
        out.push((verts, internal));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// A tree containing `s` whose internal vertices share a color.
pub fn vertex_tree_oracle(trees: &[(u64, u64)], colors: &[usize], s: u64) -> bool {
    if popcount(s) <= 1 {
        return true;
    }
    trees.iter().any(|&(verts, internal)| {
        if verts & s != s {
            return false;
        }
        let mut cs = (0..64)
            .filter(|&v| internal >> v & 1 == 1)
            .map(|v| colors[v]);
        match cs.next() {
            None => true,
            Some(c) => cs.all(|d| d == c),
        }
    })
}

/// A tree in one color class containing `s`.
pub fn edge_tree_oracle(g: &Graph, colors: &[usize], s: u64) -> bool {
    let edges = g.edges();
    let m = edges.len();
    (1u64..(1 << m)).any(|sel| {
        let mut idx = (0..m).filter(|&i| sel >> i & 1 == 1);
        let c = colors[idx.next().unwrap()];
        if !idx.all(|i| colors[i] == c) {
            return false;
        }
        match forest_info(&edges, sel) {
            Some(verts) => popcount(verts) == popcount(sel) + 1 && verts & s == s,
            None => false,
        }
    })
}

/// Number of leaves of a best spanning tree over all `(n-1)`-edge subsets.
pub fn max_leaves_oracle(g: &Graph) -> usize {
    let n = g.n();
    if n == 1 {
        return 0;
    }
    let edges = g.edges();
    let m = edges.len();
    let mut best = 0;
    let mut sel: u64 = (1 << (n - 1)) - 1;
    while sel < 1 << m {
        if let Some(verts) = forest_info(&edges, sel) {
            if popcount(verts) == n {
                let mut deg = vec![0usize; n];
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if sel >> i & 1 == 1 {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                best = best.max(deg.iter().filter(|&&d| d == 1).count());
            }
        }
        let c = sel & sel.wrapping_neg();
        let r = sel + c;
        sel = (((r ^ sel) >> 2) / c) | r;
    }
    best
}

fn dominates(g: &Graph, s: u64) -> bool {
    (0..g.n()).all(|v| s >> v & 1 == 1 || (0..g.n()).any(|u| s >> u & 1 == 1 && g.has_edge(u, v)))
}

fn connected_on(g: &Graph, s: u64) -> bool {
    if s == 0 {
        return false;
    }
    let start = s.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in 0..g.n() {
            if s >> u & 1 == 1 && seen >> u & 1 == 0 && g.has_edge(u, v) {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen == s
}

pub fn domination_oracle(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .filter(|&s| dominates(g, s))
        .map(popcount)
        .min()
        .unwrap()
}

/// `γ_c`, with `γ_c(K_1) = 0`.
pub fn connected_domination_oracle(g: &Graph) -> usize {
    if g.n() == 1 {
        return 0;
    }
    (1u64..1 << g.n())
        .filter(|&s| dominates(g, s) && connected_on(g, s))
        .map(popcount)
        .min()
        .unwrap()
}

/// Vertices whose deletion disconnects the graph.
pub fn cut_vertices_oracle(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let all = (1u64 << n) - 1;
    (0..n)
        .filter(|&v| n > 2 && !connected_on(g, all & !(1 << v)))
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
