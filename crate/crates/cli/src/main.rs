//! `binseq`: batch front-end over the sequence, orbit, family, bound and
//! matrix routines.
//!
//! Exit status is 0 when every check passes, 1 when a check ran and failed,
//! and 2 for bad arguments or unreadable input.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "binseq", version, about = "Periodic binary sequences, compatible families and Hadamard arrays")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for parallel work; 0 picks a default.
    #[arg(long, default_value_t = 0, global = true)]
    pub shards: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight, autocorrelation, runs and orbit data of one sequence.
    Analyze { seq: String },
    /// Exhaustive family search, compared with the reference table.
    Search(SearchArgs),
    /// Counting bounds with their exhaustive counterparts.
    Bounds(BoundsArgs),
    /// Gram check of matrix files.
    Verify(VerifyArgs),
    /// Build a matrix from sequences.
    Construct(ConstructArgs),
    /// Orbit and dimension data for one length.
    Schur {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 12)]
    pub qmax: usize,
    /// Let a family repeat an orbit.
    #[arg(long)]
    pub multiset: bool,
    /// Fail unless the result equals the reference table exactly.
    #[arg(long)]
    pub strict_paper: bool,
    #[arg(long, env = "PCOMS_MAX_NODES", default_value_t = binseq::pcoms::search::DEFAULT_MAX_NODES)]
    pub max_nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Family,
    Sweep,
    Circulant,
    OneCore,
    TwoCore,
    Gs,
    Perfect,
    PerfectParams,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    D1,
    D2First,
    D2Second,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(value_enum)]
    pub kind: BoundKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<i64>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub u: Option<u64>,
    #[arg(long = "case", value_enum)]
    pub case: Option<Case>,
    /// Four row sums for the Goethals-Seidel bound.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub sums: Option<Vec<i64>>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Matrix files: one `+`/`-` row per line, or the JSON wrapper.
    pub files: Vec<PathBuf>,
    /// Expected Gram scale; defaults to the column count.
    #[arg(long)]
    pub scale: Option<i64>,
    /// Check the built-in partial Hadamard examples instead of files.
    #[arg(long)]
    pub examples: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Circulant,
    OneCore,
    TwoCore,
    Gs,
    Ph,
    PhPaired,
    Example,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: ConstructKind,
    /// Sequences, or the example name for `example`. For `ph-paired`, a
    /// lone `/` separates the two families. Sequences may start with `-`,
    /// so options go before them.
    #[arg(required = true, allow_hyphen_values = true)]
    pub inputs: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.shards > 0 {
        // Ignore the error if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.shards).build_global();
    }
    match commands::run(&cli).and_then(|o| output::emit(&cli, &o).map(|_| o.pass)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("binseq: {e}");
            ExitCode::from(2)
        }
    }
}
