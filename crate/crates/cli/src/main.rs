//! `fextremal` command-line tool.
//!
//! Exit codes: 0 success, 1 internal failure, 2 unparsable input or invalid
//! arguments, 3 input is not a valid tree, 4 routes disagree, 5 output path
//! cannot be written.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fextremal::enumerate::DEFAULT_CEILING;

#[derive(Debug, Parser)]
#[command(
    name = "fextremal",
    version,
    about = "Degree-based indices and maximum-F trees under a degree bound"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a topological index on a tree file (edge list or JSON).
    Compute {
        /// Tree file; `-` reads standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = IndexName::F)]
        index: IndexName,
        /// Exponent for m1alpha and r0alpha.
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
    },
    /// Maximum-F degree spec for order n and degree bound delta.
    Extremal {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long, default_value = "all")]
        route: fextremal::routes::Route,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        enum_ceiling: usize,
    },
    /// Table of maximum-F trees for a range of orders, all routes checked.
    Table {
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value = "csv")]
        format: fextremal::routes::TableFormat,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        enum_ceiling: usize,
    },
    /// Write every non-isomorphic maximum-F tree, one file each.
    Export {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        /// Output directory, created if missing.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        enum_ceiling: usize,
    },
    /// Stream all free trees of order n (optionally degree-bounded) as JSON lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        enum_ceiling: usize,
    },
    /// Apply F-increasing edge shifts until the tree is maximum-F.
    Extremalize {
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum, default_value_t = TreeFormat::Edges)]
        format: TreeFormat,
        /// Print each shift as a JSON line on standard output; the final
        /// tree then goes to --out only.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IndexName {
    F,
    M1,
    M2,
    M1alpha,
    R0alpha,
    Randic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeFormat {
    Edges,
    Json,
    Dot,
}

/// Error carrying its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub const INTERNAL: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const INVALID_TREE: u8 = 3;
    pub const DISAGREEMENT: u8 = 4;
    pub const UNWRITABLE: u8 = 5;

    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    fextremal::routes::init_thread_pool();
    let result = match cli.command {
        Command::Compute {
            input,
            index,
            alpha,
        } => commands::compute(&input, index, alpha),
        Command::Extremal {
            n,
            delta,
            route,
            format,
            enum_ceiling,
        } => commands::extremal(n, delta, route, format, enum_ceiling),
        Command::Table {
            delta,
            n_min,
            n_max,
            format,
            out,
            enum_ceiling,
        } => commands::table(delta, n_min, n_max, format, out.as_deref(), enum_ceiling),
        Command::Export {
            n,
            delta,
            format,
            out,
            enum_ceiling,
        } => commands::export(n, delta, format, &out, enum_ceiling),
        Command::Enumerate {
            n,
            delta,
            out,
            enum_ceiling,
        } => commands::enumerate(n, delta, out.as_deref(), enum_ceiling),
        Command::Extremalize {
            input,
            delta,
            format,
            trace,
            out,
        } => commands::extremalize(&input, delta, format, trace, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
