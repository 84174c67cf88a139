mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperspec::{Budget, DEFAULT_TOL};

use crate::output::{Failure, Output};

#[derive(Parser)]
#[command(name = "hyperspec", version, about = "Spectral invariants of graphs, trees and their power hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Hypergraph order (edges padded to k vertices).
    #[arg(long, global = true)]
    k: Option<usize>,

    /// Moment order.
    #[arg(long, global = true, default_value_t = 12)]
    d: usize,

    /// Subtree size in edges (census) or largest size in grids.
    #[arg(long, global = true, default_value_t = 5)]
    m: usize,

    /// Numeric tolerance for eigenvalue comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on subgraphs visited by any single enumeration.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT.0)]
    budget: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Graph arguments take a graph6 string or a catalog name such as `P5`,
/// `C6`, `K4`, `S5`, `D~8`, `E6~`, `R6`, `saltire-star`.
#[derive(Subcommand)]
enum Command {
    /// Adjacency eigenvalues.
    Spectrum { graph: String },
    /// Exact characteristic polynomial.
    Charpoly { graph: String },
    /// Exact cospectrality of two graphs.
    Cospectral { first: String, second: String },
    /// Counts of each subtree shape with --m edges.
    Census { tree: String },
    /// Moment coefficient c_d of a tree (--d), checked by the walk oracle.
    Coeff { tree: String },
    /// Spectral moment S_d (--d) by trace and by subgraph decomposition.
    Moments { graph: String },
    /// Spectral moment of the k-power hypertree (--k, --d).
    HyperMoment { tree: String },
    /// Eigenvalue base set for order --k.
    BaseSet { graph: String },
    /// Necessary conditions for equal high-ordered spectra.
    HighOrderTest { first: String, second: String },
    /// A Smith graph with its spectral radius and cospectral Smith mates.
    Smith { family: String, size: Option<usize> },
    /// The Saltire pair C4 + K1 and K1,4.
    Saltire,
    /// Schwenk coalescences of a tree at a non-similar cospectral vertex pair.
    Schwenk {
        /// Tree carrying the vertex pair (default: the catalog R6 witness).
        #[arg(long)]
        tree: Option<String>,
        #[arg(long, requires = "v")]
        u: Option<usize>,
        #[arg(long, requires = "u")]
        v: Option<usize>,
        /// Attached rooted tree (default: K2, P3 and K1,3).
        #[arg(long, requires = "root")]
        attach: Option<String>,
        #[arg(long, requires = "attach")]
        root: Option<usize>,
    },
    /// Cospectral mates among disjoint unions of Smith graphs.
    MateSearch { graph: String },
    /// Moment coefficient tables for trees with 3 to 5 edges.
    Tables,
    /// Cospectral classes of all trees on n vertices and their separation.
    Hunt { n: usize },
}

pub struct Options {
    pub k: Option<usize>,
    pub d: usize,
    pub m: usize,
    pub tol: f64,
    pub budget: Budget,
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let o = Options {
        k: cli.k,
        d: cli.d,
        m: cli.m,
        tol: cli.tol,
        budget: Budget(cli.budget),
    };
    if !(o.tol > 0.0 && o.tol.is_finite()) {
        return Err(Failure::Usage(format!("--tol must be positive, got {}", o.tol)));
    }
    match cli.command {
        Command::Spectrum { graph } => commands::spectrum(&graph, &o),
        Command::Charpoly { graph } => commands::charpoly(&graph),
        Command::Cospectral { first, second } => commands::cospectral(&first, &second),
        Command::Census { tree } => commands::census(&tree, &o),
        Command::Coeff { tree } => commands::coeff(&tree, &o),
        Command::Moments { graph } => commands::moments(&graph, &o),
        Command::HyperMoment { tree } => commands::hyper_moment(&tree, &o),
        Command::BaseSet { graph } => commands::base_set(&graph, &o),
        Command::HighOrderTest { first, second } => commands::high_order_test(&first, &second, &o),
        Command::Smith { family, size } => commands::smith(&family, size, &o),
        Command::Saltire => commands::saltire(&o),
        Command::Schwenk { tree, u, v, attach, root } => {
            commands::schwenk(tree.as_deref(), u.zip(v), attach.as_deref().zip(root), &o)
        }
        Command::MateSearch { graph } => commands::mate_search(&graph, &o),
        Command::Tables => commands::tables(),
        Command::Hunt { n } => commands::hunt(n, &o),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            print!("{}", out.render(format));
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
