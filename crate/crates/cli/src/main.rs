use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mono_index::{Budget, Config, Exec};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "mono-index",
    version,
    about = "Monochromatic indices of small graphs"
)]
struct Cli {
    /// Worker threads for batch work (1 runs sequentially).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph file, graph6 or edge list (detected from the first character); `-` for stdin.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long)]
    g6: Option<String>,
}

#[derive(Args, Debug, Clone, Default)]
struct BudgetArgs {
    /// Edge limit of the exact edge-partition search.
    #[arg(long)]
    max_edges: Option<usize>,
    /// Vertex limit of the exact vertex-partition search.
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Limit on C(m, n-1) for the exact max-leaf tree search.
    #[arg(long)]
    max_tree_subsets: Option<u64>,
    /// Vertex limit of the domination subset searches.
    #[arg(long)]
    max_domination_vertices: Option<usize>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            max_edges_exact_mx: self.max_edges.unwrap_or(d.max_edges_exact_mx),
            max_vertices_exact_mvx: self.max_vertices.unwrap_or(d.max_vertices_exact_mvx),
            max_tree_subsets: self.max_tree_subsets.unwrap_or(d.max_tree_subsets),
            max_domination_vertices: self
                .max_domination_vertices
                .unwrap_or(d.max_domination_vertices),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    G6,
    Edges,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumerateClass {
    All,
    Connected,
    Coconnected,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// k-monochromatic index of a connected graph.
    Mx {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        /// Exhaustive partition search instead of the closed form.
        #[arg(long)]
        exact: bool,
        /// Write a witness coloring certificate.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// k-monochromatic vertex-index of a connected graph.
    Mvx {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with_all = ["cut_vertex", "bound"])]
        exact: bool,
        /// Max-leaf spanning tree formula; the graph needs a cut vertex.
        #[arg(long, conflicts_with = "bound")]
        cut_vertex: bool,
        /// Print the diameter upper bound n - diam + 2.
        #[arg(long)]
        bound: bool,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide whether the domination number is at most K through the gadget.
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        /// Write the gadget in graph6.
        #[arg(long)]
        emit_gadget: Option<PathBuf>,
        /// Write domination certificates for the graph and the gadget.
        #[arg(long)]
        certificates: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Sum of mvx_k over a graph and its complement for all co-connected graphs.
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Write records as CSV (`-` for stdout).
        #[arg(long)]
        csv: Option<PathBuf>,
        /// List six-vertex graphs with connected domination number 3 on both sides.
        #[arg(long)]
        find_f1: bool,
        /// Allow n = 8.
        #[arg(long)]
        allow_n8: bool,
    },
    /// Check a coloring or domination certificate.
    Verify {
        #[arg(
            long,
            required_unless_present = "domination",
            conflicts_with = "domination"
        )]
        coloring: Option<PathBuf>,
        #[arg(long)]
        domination: Option<PathBuf>,
        #[arg(long, required_unless_present = "domination")]
        k: Option<usize>,
    },
    /// Build the dominating set gadget of a graph.
    Gadget {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = GraphFormat::G6)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List isomorphism classes on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EnumerateClass::Connected)]
        class: EnumerateClass,
        /// Print only the number of classes.
        #[arg(long)]
        count: bool,
    },
}

fn setup_exec(threads: Option<usize>) -> Result<Exec, String> {
    match threads {
        Some(0) => Err("--threads must be at least 1".into()),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(t) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global()
                .map_err(|e| e.to_string())?;
            Ok(Exec::default())
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => {
            eprintln!("warning: built without the parallel feature; running sequentially");
            Ok(Exec::Sequential)
        }
        None => Ok(Exec::default()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let exec = match setup_exec(cli.threads) {
        Ok(e) => e,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let cfg = |b: &BudgetArgs| Config {
        budget: b.budget(),
        exec,
    };
    let outcome = match &cli.command {
        Command::Mx {
            input,
            k,
            exact,
            witness,
            budget,
        } => commands::mx(input, *k, *exact, witness.as_deref(), &cfg(budget)),
        Command::Mvx {
            input,
            k,
            exact,
            cut_vertex,
            bound,
            witness,
            budget,
        } => {
            let method = match (exact, cut_vertex, bound) {
                (true, _, _) => commands::MvxChoice::Exact,
                (_, true, _) => commands::MvxChoice::CutVertex,
                (_, _, true) => commands::MvxChoice::Bound,
                _ => commands::MvxChoice::Auto,
            };
            commands::mvx(input, *k, method, witness.as_deref(), &cfg(budget))
        }
        Command::Reduce {
            input,
            k,
            emit_gadget,
            certificates,
            budget,
        } => commands::reduce(
            input,
            *k,
            emit_gadget.as_deref(),
            certificates.as_deref(),
            &cfg(budget),
        ),
        Command::Survey {
            n,
            k,
            csv,
            find_f1,
            allow_n8,
        } => commands::survey(*n, *k, csv.as_deref(), *find_f1, *allow_n8, exec),
        Command::Verify {
            coloring,
            domination,
            k,
        } => match (coloring, domination) {
            (Some(path), _) => commands::verify_coloring(path, k.unwrap_or(0)),
            (None, Some(path)) => commands::verify_domination(path),
            (None, None) => Err("nothing to verify".into()),
        },
        Command::Gadget { input, format, out } => commands::gadget(input, *format, out.as_deref()),
        Command::Enumerate { n, class, count } => commands::enumerate(*n, *class, *count),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
