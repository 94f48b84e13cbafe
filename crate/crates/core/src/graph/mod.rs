//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, stored as
//! one adjacency bitset per row.

mod canon;
mod edgelist;
mod graph6;
mod subsets;

pub use canon::{canonical_form, enumerate_all_graphs, enumerate_connected_graphs, is_isomorphic};
pub use edgelist::{parse_edge_list, parse_graph_auto, to_dot, to_edge_list};
pub use graph6::{parse_graph6, to_graph6};
pub(crate) use subsets::k_subset_masks;
pub use subsets::{k_subsets, KSubsets};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count (one-byte graph6 size form).
pub const MAX_VERTICES: usize = 62;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in ascending order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A set of vertices of a graph on `n` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset {
    members: u64,
    n: usize,
}

impl VertexSubset {
    pub fn empty(n: usize) -> Self {
        VertexSubset { members: 0, n }
    }

    pub fn full(n: usize) -> Self {
        VertexSubset {
            members: low_bits(n),
            n,
        }
    }

    pub fn from_mask(n: usize, members: u64) -> Result<Self> {
        if n > 64 || members & !low_bits(n) != 0 {
            return Err(Error::InvalidGraph(format!(
                "vertex mask {members:#x} has members outside 0..{n}"
            )));
        }
        Ok(VertexSubset { members, n })
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut members = 0;
        for &v in vertices {
            if v >= n {
                return Err(Error::InvalidGraph(format!("vertex {v} outside 0..{n}")));
            }
            members |= bit(v);
        }
        Ok(VertexSubset { members, n })
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.members
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.members & bit(v) != 0
    }

    pub fn is_subset_of(&self, other: &VertexSubset) -> bool {
        self.members & !other.members == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bits(self.members)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "{n} vertices (at most {MAX_VERTICES} supported)"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            m: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Self::from_rows(n, adj)
    }

    /// Builds a graph from adjacency rows; rows must be symmetric and loop-free.
    pub fn from_rows(n: usize, adj: Vec<u64>) -> Result<Self> {
        Self::empty(n)?;
        if adj.len() != n {
            return Err(Error::InvalidGraph(format!(
                "{} rows for {n} vertices",
                adj.len()
            )));
        }
        let mask = low_bits(n);
        for (i, &row) in adj.iter().enumerate() {
            if row & !mask != 0 || row & bit(i) != 0 {
                return Err(Error::InvalidGraph(format!(
                    "row {i} has loop or out-of-range bit"
                )));
            }
            for j in bits(row) {
                if adj[j] & bit(i) == 0 {
                    return Err(Error::InvalidGraph(format!("asymmetric pair {i},{j}")));
                }
            }
        }
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Ok(Graph { n, adj, m })
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in a..a + b {
                edges.push((i, j));
            }
        }
        Self::from_edges(a + b, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> VertexSubset {
        VertexSubset {
            members: self.adj[v],
            n: self.n,
        }
    }

    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order. Edge indices used
    /// by edge colorings refer to positions in this list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mask = low_bits(self.n);
        let adj: Vec<u64> = (0..self.n).map(|i| !self.adj[i] & mask & !bit(i)).collect();
        let m = self.n * (self.n - 1) / 2 - self.m;
        Graph { n: self.n, adj, m }
    }

    /// Union of the closed neighbourhoods of the vertices in `set`.
    #[inline]
    pub fn closed_neighborhood(&self, set: u64) -> u64 {
        bits(set).fold(set, |acc, v| acc | self.adj[v])
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach_within(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff `set` is nonempty and induces a connected subgraph.
    pub fn induces_connected(&self, set: u64) -> bool {
        set != 0 && self.reach_within(set.trailing_zeros() as usize, set) == set
    }

    /// Connected components of the subgraph induced by `set`, as masks ordered
    /// by their lowest vertex.
    pub fn components_within(&self, set: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = set;
        while rest != 0 {
            let c = self.reach_within(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.vertex_mask())
    }

    /// True iff every vertex outside `set` has a neighbour in `set`.
    pub fn dominates(&self, set: u64) -> bool {
        self.closed_neighborhood(set) == self.vertex_mask()
    }

    /// Articulation points, by the DFS low-point characterization.
    pub fn cut_vertices(&self) -> Result<VertexSubset> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = 0u64;
        let mut time = 0usize;
        // Explicit stack of (vertex, parent, unexplored neighbours).
        let mut stack: Vec<(usize, usize, u64)> = vec![(0, usize::MAX, self.adj[0])];
        disc[0] = 0;
        low[0] = 0;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut pending)) = stack.last_mut() {
            if *pending != 0 {
                let w = pending.trailing_zeros() as usize;
                *pending &= *pending - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, v, self.adj[w]));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != 0 && low[v] >= disc[parent] {
                        cut |= bit(parent);
                    }
                }
            }
        }
        if root_children >= 2 {
            cut |= bit(0);
        }
        Ok(VertexSubset { members: cut, n })
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in bits(self.adj[v]) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.n)
            .map(|s| self.distances_from(s).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(self.n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn complement_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement().m(), 0);
        let prism = Graph::cycle(6).unwrap().complement();
        assert_eq!(prism.m(), 9);
        assert!((0..6).all(|v| prism.degree(v) == 3));
        assert_eq!(prism.complement(), Graph::cycle(6).unwrap());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).unwrap().is_connected());
        assert!(!Graph::from_edges(4, &[(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(
            Graph::path(4).unwrap().cut_vertices().unwrap().to_vec(),
            vec![1, 2]
        );
        assert!(Graph::cycle(5).unwrap().cut_vertices().unwrap().is_empty());
        assert_eq!(bowtie().cut_vertices().unwrap().to_vec(), vec![2]);
        assert_eq!(
            Graph::star(3).unwrap().cut_vertices().unwrap().to_vec(),
            vec![0]
        );
        let disc = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(disc.cut_vertices(), Err(Error::Disconnected));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(Graph::complete(4).unwrap().diameter().unwrap(), 1);
        assert_eq!(Graph::path(5).unwrap().diameter().unwrap(), 4);
        let k23e = Graph::complete_bipartite(2, 3)
            .unwrap()
            .edges()
            .into_iter()
            .filter(|&e| e != (0, 2))
            .collect::<Vec<_>>();
        assert_eq!(Graph::from_edges(5, &k23e).unwrap().diameter().unwrap(), 3);
        assert_eq!(Graph::empty(1).unwrap().diameter().unwrap(), 0);
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(63).is_err());
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_rows(2, vec![0b10, 0]).is_err());
    }

    #[test]
    fn edges_are_sorted_and_counted() {
        let g = bowtie();
        let e = g.edges();
        assert_eq!(e.len(), g.m());
        assert!(e.windows(2).all(|w| w[0] < w[1]));
    }
}
