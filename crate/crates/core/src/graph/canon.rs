//! Canonical labeling by minimum over vertex permutations, and exhaustive
//! enumeration of isomorphism classes for small `n`.
//!
//! The canonical code of a graph is the lexicographically smallest upper
//! triangle bitstring (graph6 column order, first pair most significant)
//! over all `n!` relabelings. The search assigns canonical positions one at a
//! time; placing vertex `w` at position `j` fixes the `j` bits of column `j`,
//! so only candidates producing the smallest column can lead to the minimum.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::{bit, bits, Graph};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Largest `n` accepted by the enumerators.
pub const MAX_ENUMERATION_VERTICES: usize = 8;

#[inline]
fn tri(j: usize) -> usize {
    j * j.saturating_sub(1) / 2
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    total: usize,
    order: Vec<usize>,
    best: u64,
}

impl Search<'_> {
    fn column(&self, depth: usize, w: usize) -> u64 {
        let mut c = 0u64;
        for &v in &self.order[..depth] {
            c = (c << 1) | ((self.adj[w] >> v) & 1);
        }
        c
    }

    fn run(&mut self, depth: usize, used: u64, prefix: u64) {
        if depth == self.n {
            self.best = self.best.min(prefix);
            return;
        }
        let mut min_col = u64::MAX;
        let mut ties = 0u64;
        for w in bits(!used & super::low_bits(self.n)) {
            let c = self.column(depth, w);
            if c < min_col {
                min_col = c;
                ties = bit(w);
            } else if c == min_col {
                ties |= bit(w);
            }
        }
        let next = (prefix << depth) | min_col;
        let shift = self.total - tri(depth + 1);
        if self.best != u64::MAX && next > self.best >> shift {
            return;
        }
        for w in bits(ties) {
            self.order.push(w);
            self.run(depth + 1, used | bit(w), next);
            self.order.pop();
        }
    }
}

/// Canonical code of `g`; equal codes iff isomorphic graphs (for equal `n`).
pub fn canonical_form(g: &Graph) -> u64 {
    canonical_code(g.rows(), g.n())
}

fn canonical_code(adj: &[u64], n: usize) -> u64 {
    if n <= 1 {
        return 0;
    }
    let mut s = Search {
        adj,
        n,
        total: tri(n),
        order: Vec::with_capacity(n),
        best: u64::MAX,
    };
    s.run(0, 0, 0);
    s.best
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

impl Graph {
    /// The canonically labeled representative of this graph's class.
    pub fn canonical(&self) -> Graph {
        decode(self.n(), canonical_form(self))
    }
}

fn decode(n: usize, code: u64) -> Graph {
    let total = tri(n);
    let mut adj = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> (total - 1 - idx)) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            idx += 1;
        }
    }
    Graph::from_rows(n, adj).expect("decoded rows are symmetric")
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_VERTICES}, got {n}"
        )));
    }
    Ok(())
}

fn all_codes(n: usize) -> &'static [u64] {
    static CACHE: [OnceLock<Vec<u64>>; MAX_ENUMERATION_VERTICES + 1] =
        [const { OnceLock::new() }; MAX_ENUMERATION_VERTICES + 1];
    CACHE[n].get_or_init(|| augment_by_edges(n, Exec::default()))
}

// Level-by-level edge augmentation: every graph with e+1 edges arises from
// one with e edges by adding an edge, so closing each level under canonical
// dedup reaches every class.
fn augment_by_edges(n: usize, exec: Exec) -> Vec<u64> {
    let mut all = BTreeSet::new();
    let mut level = vec![0u64];
    all.insert(0u64);
    for _ in 0..tri(n) {
        let children = exec.map(&level, |&code| {
            let g = decode(n, code);
            let mut out = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if !g.has_edge(i, j) {
                        let mut adj = g.rows().to_vec();
                        adj[i] |= bit(j);
                        adj[j] |= bit(i);
                        out.push(canonical_code(&adj, n));
                    }
                }
            }
            out
        });
        let next: BTreeSet<u64> = children.into_iter().flatten().collect();
        all.extend(next.iter().copied());
        level = next.into_iter().collect();
    }
    all.into_iter().collect()
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// ascending canonical order.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>> {
    check_n(n)?;
    Ok(all_codes(n).iter().map(|&c| decode(n, c)).collect())
}

/// One canonically labeled representative per isomorphism class of connected
/// graphs on `n` vertices, in ascending canonical order.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_n(n)?;
    Ok(all_codes(n)
        .iter()
        .filter(|&&c| c.count_ones() as usize + 1 >= n)
        .map(|&c| decode(n, c))
        .filter(Graph::is_connected)
        .collect())
}
