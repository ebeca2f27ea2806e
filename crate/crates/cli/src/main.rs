//! `subcubic`: solve, list families, and verify bounds from the command line.
//!
//! Every command prints one JSON record per line. Exit status is 0 when all
//! verdicts hold, 1 when any fails, and 2 for usage or input errors.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "subcubic",
    version,
    about = "Feedback vertex sets and induced-forest bounds for subcubic graphs"
)]
struct Cli {
    /// Largest graph the solver will accept. Family generation also honors
    /// it, up to the generator's own cap of 20 vertices.
    #[arg(long, global = true, env = "SUBCUBIC_MAX_VERTICES", default_value_t = 24)]
    max_vertices: usize,

    /// Largest vertex count `verify --n-max` may enumerate.
    #[arg(long, global = true, env = "SUBCUBIC_ENUM_MAX", default_value_t = subcubic::enumerate::DEFAULT_MAX_VERTICES)]
    enum_max: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum feedback vertex set of each input graph.
    Solve {
        #[command(flatten)]
        source: Source,
        /// Vertices the set must contain.
        #[arg(long, num_args = 1..)]
        required: Vec<usize>,
        /// Solve the graph with this edge deleted.
        #[arg(long)]
        minus_edge: Option<usize>,
    },
    /// Members of F(i,j), or of the padded family when --g and --k are given.
    Family {
        i: usize,
        j: usize,
        #[arg(long, requires = "k")]
        g: Option<usize>,
        #[arg(long, requires = "g")]
        k: Option<usize>,
        /// Keep only members of at least this girth.
        #[arg(long)]
        girth_min: Option<usize>,
        #[arg(long, default_value = "medge")]
        format: String,
    },
    /// Check the induced-forest bound and the explicit classification.
    Verify {
        /// Enumerate connected subcubic graphs on up to this many vertices.
        #[arg(long, conflicts_with_all = ["name", "input"])]
        n_max: Option<usize>,
        #[arg(long)]
        g: usize,
        #[command(flatten)]
        source: OptionalSource,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        workers: Option<usize>,
        /// Print a record for every checked graph, not only failures.
        #[arg(long)]
        emit_all: bool,
    },
    /// The dodecahedron characterization on cubic inputs.
    Dodeca {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Args)]
struct Source {
    /// Catalog name such as petersen, q3, r1 or c5.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    name: Option<String>,
    /// Graph file (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    /// graph6 or medge; detected from the input when omitted.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Debug, Args)]
struct OptionalSource {
    #[arg(long, conflicts_with = "input")]
    name: Option<String>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    format: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
