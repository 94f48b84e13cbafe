//! Reduction from Dominating Set to Connected Dominating Set on graphs with a
//! cut vertex, and the decision bridge to `mvx_k`.
//!
//! From `G` on `v_0..v_{n-1}` the gadget `G'` adds a shadow `u_i` adjacent to
//! `v_i` and its neighbours, a hub `x` adjacent to every shadow, and a pendant
//! `y` on `x`. `G` has a dominating set of size at most `K` iff `G'` has a
//! connected dominating set of size at most `K + 1`.
//!
//! Vertex layout of the gadget: `v_i = i`, `u_i = n + i`, `x = 2n`,
//! `y = 2n + 1`.

use std::fmt;

use crate::error::{check_k, Error, Result};
use crate::graph::{bit, bits, low_bits, Graph, VertexSubset, MAX_VERTICES};
use crate::mvx::{minimum_connected_dominating_set, mvx_via_cut_vertex, smallest_subset};
use crate::Budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominationKind {
    Dominating,
    ConnectedDominating,
}

impl DominationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DominationKind::Dominating => "dominating",
            DominationKind::ConnectedDominating => "connected-dominating",
        }
    }
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for DominationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dominating" => Ok(DominationKind::Dominating),
            "connected-dominating" => Ok(DominationKind::ConnectedDominating),
            other => Err(Error::InvalidCertificate(format!("unknown kind {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominationCertificate {
    pub vertices: VertexSubset,
    pub kind: DominationKind,
}

impl DominationCertificate {
    pub fn new(vertices: VertexSubset, kind: DominationKind) -> Self {
        DominationCertificate { vertices, kind }
    }

    /// Checks the claim against `g` from scratch.
    pub fn check(&self, g: &Graph) -> bool {
        let d = self.vertices.mask();
        if self.vertices.ambient() != g.n() || d & !g.vertex_mask() != 0 || !g.dominates(d) {
            return false;
        }
        match self.kind {
            DominationKind::Dominating => true,
            DominationKind::ConnectedDominating => g.n() == 1 || g.induces_connected(d),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetMap {
    pub source: Graph,
    pub gadget: Graph,
}

impl GadgetMap {
    pub fn n(&self) -> usize {
        self.source.n()
    }

    pub fn v_index(&self, i: usize) -> usize {
        i
    }

    pub fn u_index(&self, i: usize) -> usize {
        self.n() + i
    }

    pub fn x(&self) -> usize {
        2 * self.n()
    }

    pub fn y(&self) -> usize {
        2 * self.n() + 1
    }

    fn originals(&self) -> u64 {
        low_bits(self.n())
    }

    fn shadows(&self) -> u64 {
        low_bits(self.n()) << self.n()
    }
}

pub fn build_gadget(g: &Graph) -> Result<GadgetMap> {
    let n = g.n();
    if 2 * n + 2 > MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "gadget of an {n}-vertex graph exceeds {MAX_VERTICES} vertices"
        )));
    }
    let mut edges = g.edges();
    let (x, y) = (2 * n, 2 * n + 1);
    for i in 0..n {
        let u = n + i;
        edges.push((u, i));
        edges.extend(bits(g.row(i)).map(|v| (u, v)));
        edges.push((x, u));
    }
    edges.push((x, y));
    let gadget = Graph::from_edges(2 * n + 2, &edges)?;
    debug_assert_eq!(gadget.m(), 3 * g.m() + 2 * n + 1);
    Ok(GadgetMap {
        source: g.clone(),
        gadget,
    })
}

pub fn minimum_dominating_set(g: &Graph) -> Result<VertexSubset> {
    minimum_dominating_set_with(g, &Budget::default())
}

pub fn minimum_dominating_set_with(g: &Graph, budget: &Budget) -> Result<VertexSubset> {
    smallest_subset(g.n(), budget.max_domination_vertices, |s| g.dominates(s))
}

pub fn dominating_number(g: &Graph) -> Result<usize> {
    Ok(minimum_dominating_set(g)?.len())
}

/// `D' = {u_i : v_i ∈ D} ∪ {x}`.
pub fn lift_dominating_set(
    map: &GadgetMap,
    d: &DominationCertificate,
) -> Result<DominationCertificate> {
    if !d.check(&map.source) {
        return Err(Error::InvalidCertificate(
            "input is not a dominating set of the source".into(),
        ));
    }
    let lifted = (d.vertices.mask() << map.n()) | bit(map.x());
    let out = DominationCertificate::new(
        VertexSubset::from_mask(map.gadget.n(), lifted)?,
        DominationKind::ConnectedDominating,
    );
    if !out.check(&map.gadget) {
        return Err(Error::InvalidCertificate(
            "lifted set fails the gadget check".into(),
        ));
    }
    Ok(out)
}

/// `D = {v_i : u_i ∈ D' or v_i ∈ D'}`.
pub fn project_cds(
    map: &GadgetMap,
    d_prime: &DominationCertificate,
) -> Result<DominationCertificate> {
    let g_prime = &map.gadget;
    let cds = DominationCertificate::new(d_prime.vertices, DominationKind::ConnectedDominating);
    if !cds.check(g_prime) {
        return Err(Error::InvalidCertificate(
            "input is not a connected dominating set of the gadget".into(),
        ));
    }
    let dm = d_prime.vertices.mask();
    let projected = (dm & map.originals()) | ((dm & map.shadows()) >> map.n());
    let out = DominationCertificate::new(
        VertexSubset::from_mask(map.n(), projected)?,
        DominationKind::Dominating,
    );
    if !out.check(&map.source) {
        return Err(Error::InvalidCertificate(
            "projected set fails the source check".into(),
        ));
    }
    Ok(out)
}

/// Decides `γ(G) <= K` through the gadget: `mvx_k(G') = |V'| - γ_c(G') + 1`
/// by the cut-vertex identity, so the answer is `mvx_k(G') >= |V'| - K`.
pub fn decide_ds_via_mvx(g: &Graph, k_bound: usize) -> Result<bool> {
    check_k(k_bound, 1, g.n())?;
    let map = build_gadget(g)?;
    let mvx = mvx_via_cut_vertex(&map.gadget, 2)?.value;
    Ok(mvx + k_bound >= map.gadget.n())
}

/// A minimum dominating set of the source together with its lift.
pub fn certificate_pair(map: &GadgetMap) -> Result<(DominationCertificate, DominationCertificate)> {
    let d = DominationCertificate::new(
        minimum_dominating_set(&map.source)?,
        DominationKind::Dominating,
    );
    let lifted = lift_dominating_set(map, &d)?;
    Ok((d, lifted))
}

/// A minimum connected dominating set of the gadget.
pub fn minimum_gadget_cds(map: &GadgetMap) -> Result<DominationCertificate> {
    Ok(DominationCertificate::new(
        minimum_connected_dominating_set(&map.gadget)?,
        DominationKind::ConnectedDominating,
    ))
}
