//! Exact computation, construction, and verification of the k-monochromatic
//! index `mx_k` and the k-monochromatic vertex-index `mvx_k` of small graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: bitset graphs, graph6 and edge-list I/O, structural
//!   predicates, exhaustive enumeration of small isomorphism classes.
//! - [`coloring`]: edge and vertex colorings and the two monochromatic-tree
//!   existence predicates.
//! - [`mx`]: the edge version (closed form, extremal construction,
//!   normalisation and simplification of colorings, brute-force oracle).
//! - [`mvx`]: the vertex version (max-leaf spanning trees, connected
//!   domination, exact partition search, closed forms).
//! - [`reduction`]: the dominating set to connected dominating set gadget.
//! - [`survey`]: Nordhaus-Gaddum sweeps over co-connected graphs.
//! - [`certificate`]: text formats for coloring and domination certificates.
//!
//! Batch loops run through [`Exec`]; with the default `parallel` feature they
//! use rayon, otherwise they run sequentially with identical results.

pub mod certificate;
pub mod coloring;
pub mod error;
pub mod exec;
pub mod graph;
pub mod mvx;
pub mod mx;
pub mod partition;
pub mod reduction;
pub mod survey;

pub use coloring::{ColorTree, EdgeColoring, VertexColoring};
pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{Graph, VertexSubset};

/// Search limits for the exponential solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest edge count accepted by the edge-partition search.
    pub max_edges_exact_mx: usize,
    /// Largest vertex count accepted by the vertex-partition search.
    pub max_vertices_exact_mvx: usize,
    /// Largest `C(m, n-1)` accepted by the exact max-leaf tree search.
    pub max_tree_subsets: u64,
    /// Largest vertex count accepted by the domination subset searches.
    pub max_domination_vertices: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_edges_exact_mx: 10,
            max_vertices_exact_mvx: 8,
            max_tree_subsets: 10_000_000,
            max_domination_vertices: 20,
        }
    }
}

/// Budget plus execution strategy, threaded through the `*_with` variants.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub budget: Budget,
    pub exec: Exec,
}
