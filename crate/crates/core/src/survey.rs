//! Nordhaus-Gaddum sweeps: `mvx_k(G) + mvx_k(Ḡ)` over every graph `G` with
//! `G` and `Ḡ` both connected, checked against the expected bounds.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{check_k, Error, Result};
use crate::graph::{canonical_form, enumerate_connected_graphs, is_isomorphic, to_graph6, Graph};
use crate::mvx::{connected_domination_number, full_range_end, mvx_exact_with};
use crate::{Config, Exec};

/// First line of every survey CSV.
pub const CSV_SCHEMA: &str = "# schema: mono-index-survey-v1";
pub const CSV_HEADER: &str =
    "n,k,g6,g6_complement,mvx_g,mvx_gbar,sum,lower_bound,upper_bound,verdict";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRecord {
    pub n: usize,
    pub k: usize,
    pub g6: String,
    pub g6_complement: String,
    pub mvx_g: usize,
    pub mvx_gbar: usize,
    pub sum: usize,
    pub lower_bound: Option<usize>,
    pub upper_bound: Option<usize>,
}

impl SurveyRecord {
    pub fn lower_ok(&self) -> bool {
        self.lower_bound.is_none_or(|b| self.sum >= b)
    }

    pub fn upper_ok(&self) -> bool {
        self.upper_bound.is_none_or(|b| self.sum <= b)
    }

    pub fn passed(&self) -> bool {
        self.lower_ok() && self.upper_ok()
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }
}

/// Graphs on `n` vertices whose complement is also connected, one per
/// isomorphism class, in ascending canonical order.
pub fn enumerate_coconnected(n: usize) -> Result<Vec<Graph>> {
    if !(4..=8).contains(&n) {
        return Err(Error::UnsupportedSize(format!(
            "co-connected enumeration needs 4 <= n <= 8, got {n}"
        )));
    }
    Ok(enumerate_connected_graphs(n)?
        .into_iter()
        .filter(|g| g.complement().is_connected())
        .collect())
}

/// Lower bound on `mvx_k(G) + mvx_k(Ḡ)` for co-connected `G` on `n >= 5`
/// vertices and `3 <= k <= n`.
pub fn expected_lower_bound(n: usize, k: usize) -> Result<usize> {
    if n < 5 {
        return Err(Error::Domain(format!(
            "lower bound stated for n >= 5, got {n}"
        )));
    }
    check_k(k, 3, n)?;
    Ok(match n {
        5 => 6,
        6 => 8,
        _ if k <= full_range_end(n) => n + 3,
        _ => n + 2,
    })
}

/// `2n - 2` for `ceil(n/2) <= k <= n` and `n >= 5`; no claim otherwise.
pub fn expected_upper_bound(n: usize, k: usize) -> Option<usize> {
    (n >= 5 && k >= n.div_ceil(2) && k <= n).then(|| 2 * n - 2)
}

fn lower_bound_for_record(n: usize, k: usize) -> Option<usize> {
    if n == 4 {
        // G = Ḡ = P_4 is the only co-connected graph and its sum is 6.
        Some(6)
    } else {
        expected_lower_bound(n, k).ok()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SurveyOptions {
    pub config: Config,
    /// Restrict to a single `k`.
    pub k: Option<usize>,
    /// Permit `n = 8` (several minutes single-threaded).
    pub allow_n8: bool,
}

/// `mvx_k` for `k = 3..=n` of every co-connected graph on `n` vertices,
/// keyed by canonical code.
fn mvx_table(graphs: &[Graph], n: usize, cfg: &Config) -> Result<HashMap<u64, Vec<usize>>> {
    let inner = Config {
        exec: cfg.exec.inner(),
        ..*cfg
    };
    let rows = cfg.exec.map(graphs, |g| -> Result<(u64, Vec<usize>)> {
        let vals = (3..=n)
            .map(|k| mvx_exact_with(g, k, &inner).map(|r| r.value))
            .collect::<Result<Vec<_>>>()?;
        Ok((canonical_form(g), vals))
    });
    rows.into_iter().collect()
}

pub fn survey_bounds(n: usize) -> Result<Vec<SurveyRecord>> {
    survey_bounds_with(n, &SurveyOptions::default())
}

/// One record per (co-connected `G`, `k`), sorted by `(n, g6, k)`.
pub fn survey_bounds_with(n: usize, opts: &SurveyOptions) -> Result<Vec<SurveyRecord>> {
    let max_n = if opts.allow_n8 { 8 } else { 7 };
    if !(4..=max_n).contains(&n) {
        return Err(Error::Budget(format!(
            "survey supports 4 <= n <= {max_n}, got {n}"
        )));
    }
    if let Some(k) = opts.k {
        check_k(k, 3, n)?;
    }
    let graphs = enumerate_coconnected(n)?;
    let table = mvx_table(&graphs, n, &opts.config)?;
    let mut records = Vec::with_capacity(graphs.len() * (n - 2));
    for g in &graphs {
        let gbar = g.complement();
        let mine = &table[&canonical_form(g)];
        let theirs = &table[&canonical_form(&gbar)];
        let g6 = to_graph6(g)?;
        let g6_complement = to_graph6(&gbar)?;
        for k in 3..=n {
            if opts.k.is_some_and(|only| only != k) {
                continue;
            }
            let (a, b) = (mine[k - 3], theirs[k - 3]);
            records.push(SurveyRecord {
                n,
                k,
                g6: g6.clone(),
                g6_complement: g6_complement.clone(),
                mvx_g: a,
                mvx_gbar: b,
                sum: a + b,
                lower_bound: lower_bound_for_record(n, k),
                upper_bound: expected_upper_bound(n, k),
            });
        }
    }
    records.sort_by(|x, y| (x.n, &x.g6, x.k).cmp(&(y.n, &y.g6, y.k)));
    Ok(records)
}

/// Extremes of the sum for one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSummary {
    pub k: usize,
    pub min_sum: usize,
    pub minimizers: Vec<String>,
    pub max_sum: usize,
    pub maximizers: Vec<String>,
    pub lower_violations: usize,
    pub upper_violations: usize,
}

/// Per-`k` extremes; for `k < ceil(n/2)` the maximum is an observation only.
pub fn summarize(records: &[SurveyRecord]) -> Vec<KSummary> {
    let mut by_k: BTreeMap<usize, Vec<&SurveyRecord>> = BTreeMap::new();
    for r in records {
        by_k.entry(r.k).or_default().push(r);
    }
    by_k.into_iter()
        .map(|(k, rs)| {
            let min_sum = rs.iter().map(|r| r.sum).min().unwrap_or(0);
            let max_sum = rs.iter().map(|r| r.sum).max().unwrap_or(0);
            let pick = |s: usize| {
                rs.iter()
                    .filter(|r| r.sum == s)
                    .map(|r| r.g6.clone())
                    .collect()
            };
            KSummary {
                k,
                min_sum,
                minimizers: pick(min_sum),
                max_sum,
                maximizers: pick(max_sum),
                lower_violations: rs.iter().filter(|r| !r.lower_ok()).count(),
                upper_violations: rs.iter().filter(|r| !r.upper_ok()).count(),
            }
        })
        .collect()
}

pub fn to_csv(records: &[SurveyRecord]) -> String {
    let opt = |v: Option<usize>| v.map_or_else(|| "NA".to_string(), |b| b.to_string());
    let mut out = format!("{CSV_SCHEMA}\n{CSV_HEADER}\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.n,
            r.k,
            r.g6,
            r.g6_complement,
            r.mvx_g,
            r.mvx_gbar,
            r.sum,
            opt(r.lower_bound),
            opt(r.upper_bound),
            r.verdict()
        );
    }
    out
}

/// `K_{n1,n2}` (sides `0..n1`, `n1..n1+n2`) minus the edge `{0, n1}`.
pub fn build_near_complete_bipartite(n1: usize, n2: usize) -> Result<Graph> {
    if n1 < 2 || n2 < 2 {
        return Err(Error::Domain(format!(
            "both sides need at least 2 vertices, got {n1}, {n2}"
        )));
    }
    let edges: Vec<_> = Graph::complete_bipartite(n1, n2)?
        .edges()
        .into_iter()
        .filter(|&e| e != (0, n1))
        .collect();
    Graph::from_edges(n1 + n2, &edges)
}

/// `(G, γ_c(G), γ_c(Ḡ))` for every co-connected `G` on `n` vertices.
pub fn connected_domination_pairs(n: usize, exec: Exec) -> Result<Vec<(Graph, usize, usize)>> {
    let graphs = enumerate_coconnected(n)?;
    exec.map(&graphs, |g| {
        Ok((
            g.clone(),
            connected_domination_number(g)?,
            connected_domination_number(&g.complement())?,
        ))
    })
    .into_iter()
    .collect()
}

fn in_family(g: &Graph, family: &[Graph]) -> bool {
    family.iter().any(|f| is_isomorphic(g, f))
}

/// `C_n, C̄_n, P_n, P̄_n` (cycles only for `n >= 3`).
pub fn cycle_path_family(n: usize) -> Result<Vec<Graph>> {
    let mut out = vec![Graph::path(n)?, Graph::path(n)?.complement()];
    if n >= 3 {
        out.push(Graph::cycle(n)?);
        out.push(Graph::cycle(n)?.complement());
    }
    Ok(out)
}

/// All co-connected six-vertex graphs with `γ_c(G) = γ_c(Ḡ) = 3` outside the
/// cycle and path families. The expected answer is one complementary pair.
pub fn locate_f1() -> Result<Vec<Graph>> {
    let family = cycle_path_family(6)?;
    Ok(connected_domination_pairs(6, Exec::default())?
        .into_iter()
        .filter(|(g, a, b)| *a == 3 && *b == 3 && !in_family(g, &family))
        .map(|(g, _, _)| g)
        .collect())
}

/// Groups graphs into complementary pairs (a self-complementary graph forms
/// a pair with itself).
pub fn complementary_pairs(graphs: &[Graph]) -> Vec<(Graph, Graph)> {
    let mut used = vec![false; graphs.len()];
    let mut out = Vec::new();
    for i in 0..graphs.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let comp = graphs[i].complement();
        let partner = (0..graphs.len()).find(|&j| !used[j] && is_isomorphic(&graphs[j], &comp));
        if let Some(j) = partner {
            used[j] = true;
            out.push((graphs[i].clone(), graphs[j].clone()));
        } else {
            out.push((graphs[i].clone(), comp));
        }
    }
    out
}
