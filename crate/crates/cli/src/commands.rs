use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use mono_index::certificate::{
    parse_coloring, parse_domination, render_domination_blocks, render_edge_coloring,
    render_vertex_coloring, ColoringCertificate,
};
use mono_index::coloring::{verify_mvx_coloring, verify_mx_coloring};
use mono_index::graph::{
    enumerate_all_graphs, enumerate_connected_graphs, parse_graph6, parse_graph_auto, to_dot,
    to_edge_list, to_graph6,
};
use mono_index::mvx::{
    connected_domination_number, diameter_upper_bound, mvx_exact_with, mvx_via_cut_vertex_with,
    MvxResult,
};
use mono_index::mx::{construct_extremal_mx, mx_exact_bruteforce_with, mx_k_formula};
use mono_index::reduction::{
    build_gadget, certificate_pair, decide_ds_via_mvx, minimum_dominating_set_with,
    minimum_gadget_cds, project_cds,
};
use mono_index::survey::{
    complementary_pairs, enumerate_coconnected, locate_f1, summarize, survey_bounds_with, to_csv,
    SurveyOptions,
};
use mono_index::{Config, Exec, Graph};

use crate::{EnumerateClass, GraphFormat, GraphInput};

pub type Outcome = Result<bool, String>;

// stdout writes ignore errors so that a closed pipe ends output quietly
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

fn err(e: mono_index::Error) -> String {
    e.to_string()
}

fn read_text(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<(), String> {
    if path == Path::new("-") {
        let _ = std::io::stdout().write_all(text.as_bytes());
        return Ok(());
    }
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(input: &GraphInput) -> Result<Graph, String> {
    match (&input.graph, &input.g6) {
        (Some(path), _) => {
            let text = read_text(path)?;
            parse_graph_auto(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(g6)) => parse_graph6(g6).map_err(err),
        (None, None) => Err("no graph given".into()),
    }
}

pub fn mx(
    input: &GraphInput,
    k: usize,
    exact: bool,
    witness: Option<&Path>,
    cfg: &Config,
) -> Outcome {
    let g = load_graph(input)?;
    let (value, coloring) = if exact {
        let r = mx_exact_bruteforce_with(&g, k, cfg).map_err(err)?;
        (r.value, r.witness)
    } else {
        let value = mx_k_formula(&g, k).map_err(err)?;
        (value, construct_extremal_mx(&g).map_err(err)?)
    };
    if let Some(path) = witness {
        write_text(path, &render_edge_coloring(&coloring).map_err(err)?)?;
    }
    out!("{value}");
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MvxChoice {
    Auto,
    Exact,
    CutVertex,
    Bound,
}

pub fn mvx(
    input: &GraphInput,
    k: usize,
    choice: MvxChoice,
    witness: Option<&Path>,
    cfg: &Config,
) -> Outcome {
    let g = load_graph(input)?;
    if choice == MvxChoice::Bound {
        if witness.is_some() {
            return Err("--bound produces no witness".into());
        }
        if k < 2 || k > g.n() {
            return Err(format!("k must lie in 2..={}, got {k}", g.n()));
        }
        out!("{}", diameter_upper_bound(&g).map_err(err)?);
        return Ok(true);
    }
    let exact = match choice {
        MvxChoice::Exact => true,
        MvxChoice::CutVertex => false,
        _ => g.n() <= cfg.budget.max_vertices_exact_mvx,
    };
    let r: MvxResult = if exact {
        mvx_exact_with(&g, k, cfg)
    } else {
        mvx_via_cut_vertex_with(&g, k, &cfg.budget)
    }
    .map_err(err)?;
    if let (Some(path), Some(vc)) = (witness, &r.witness) {
        write_text(path, &render_vertex_coloring(vc).map_err(err)?)?;
    }
    out!("{}", r.value);
    Ok(true)
}

pub fn reduce(
    input: &GraphInput,
    k: usize,
    emit_gadget: Option<&Path>,
    certificates: Option<&Path>,
    cfg: &Config,
) -> Outcome {
    let g = load_graph(input)?;
    let decision = decide_ds_via_mvx(&g, k).map_err(err)?;
    let map = build_gadget(&g).map_err(err)?;
    let gamma = minimum_dominating_set_with(&g, &cfg.budget)
        .map_err(err)?
        .len();
    let gamma_c = connected_domination_number(&map.gadget).map_err(err)?;
    out!("decision: {}", if decision { "yes" } else { "no" });
    out!("dominating_number: {gamma}");
    out!(
        "gadget: {} vertices, {} edges",
        map.gadget.n(),
        map.gadget.m()
    );
    out!("gadget_connected_domination_number: {gamma_c}");
    if let Some(path) = emit_gadget {
        write_text(path, &format!("{}\n", to_graph6(&map.gadget).map_err(err)?))?;
    }
    if let Some(path) = certificates {
        let (d, lifted) = certificate_pair(&map).map_err(err)?;
        let cds = minimum_gadget_cds(&map).map_err(err)?;
        let projected = project_cds(&map, &cds).map_err(err)?;
        let blocks = [
            (g.clone(), d),
            (map.gadget.clone(), lifted),
            (map.gadget.clone(), cds),
            (g.clone(), projected),
        ];
        write_text(path, &render_domination_blocks(&blocks).map_err(err)?)?;
    }
    Ok(true)
}

pub fn survey(
    n: usize,
    k: Option<usize>,
    csv: Option<&Path>,
    find_f1: bool,
    allow_n8: bool,
    exec: Exec,
) -> Outcome {
    let opts = SurveyOptions {
        config: Config {
            exec,
            ..Config::default()
        },
        k,
        allow_n8,
    };
    let records = survey_bounds_with(n, &opts).map_err(err)?;
    for s in summarize(&records) {
        out!(
            "n={n} k={} min={} ({} graphs) max={} ({} graphs) lower_violations={} upper_violations={}",
            s.k,
            s.min_sum,
            s.minimizers.len(),
            s.max_sum,
            s.maximizers.len(),
            s.lower_violations,
            s.upper_violations
        );
    }
    if let Some(path) = csv {
        write_text(path, &to_csv(&records))?;
    }
    if find_f1 {
        let found = locate_f1().map_err(err)?;
        let pairs = complementary_pairs(&found);
        for (a, b) in &pairs {
            out!(
                "f1_pair: {} {}",
                to_graph6(a).map_err(err)?,
                to_graph6(b).map_err(err)?
            );
        }
        if pairs.len() != 1 {
            eprintln!(
                "warning: {} candidate pairs; the six-vertex equality case is ambiguous",
                pairs.len()
            );
        }
    }
    Ok(records.iter().all(|r| r.passed()))
}

pub fn verify_coloring(path: &Path, k: usize) -> Outcome {
    let cert = parse_coloring(&read_text(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let ok = match &cert {
        ColoringCertificate::Edge(ec) => verify_mx_coloring(ec, k),
        ColoringCertificate::Vertex(vc) => verify_mvx_coloring(vc, k),
    }
    .map_err(err)?;
    let kind = match cert {
        ColoringCertificate::Edge(_) => "edge",
        ColoringCertificate::Vertex(_) => "vertex",
    };
    out!(
        "{} {kind} coloring with {} colors, k = {k}",
        if ok { "valid" } else { "invalid" },
        cert.num_colors()
    );
    Ok(ok)
}

pub fn verify_domination(path: &Path) -> Outcome {
    let blocks =
        parse_domination(&read_text(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut all = true;
    for (i, (g, c)) in blocks.iter().enumerate() {
        let ok = c.check(g);
        all &= ok;
        out!(
            "block {}: {} {} set of size {}",
            i + 1,
            if ok { "valid" } else { "invalid" },
            c.kind,
            c.len()
        );
    }
    Ok(all)
}

pub fn gadget(input: &GraphInput, format: GraphFormat, out: Option<&Path>) -> Outcome {
    let g = load_graph(input)?;
    let map = build_gadget(&g).map_err(err)?;
    let text = match format {
        GraphFormat::G6 => format!("{}\n", to_graph6(&map.gadget).map_err(err)?),
        GraphFormat::Edges => to_edge_list(&map.gadget),
        GraphFormat::Dot => to_dot(&map.gadget, "gadget"),
    };
    match out {
        Some(path) => write_text(path, &text)?,
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    Ok(true)
}

pub fn enumerate(n: usize, class: EnumerateClass, count: bool) -> Outcome {
    let graphs = match class {
        EnumerateClass::All => enumerate_all_graphs(n),
        EnumerateClass::Connected => enumerate_connected_graphs(n),
        EnumerateClass::Coconnected => enumerate_coconnected(n),
    }
    .map_err(err)?;
    if count {
        out!("{}", graphs.len());
    } else {
        for g in &graphs {
            out!("{}", to_graph6(g).map_err(err)?);
        }
    }
    Ok(true)
}
