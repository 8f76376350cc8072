//! `croissant`: spectral complexity of simple undirected graphs, and the
//! admissible region they occupy in the (link density, complexity) plane.
//!
//! Exit codes: 0 success, 2 usage or parse failure, 3 numeric failure
//! (non-finite input values or an eigensolver that did not converge).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod cmds;
mod emit;
mod record;

use record::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("in {path}")]
    InFile {
        path: String,
        #[source]
        source: croissant_core::Error,
    },
    #[error(transparent)]
    Domain(#[from] croissant_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::InFile { source, .. } | CliError::Domain(source) => {
                if source.is_numeric() {
                    3
                } else {
                    2
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Er,
    Ws,
    Ba,
    Multistar,
    Circulant,
}

impl ModelKind {
    fn as_str(self) -> &'static str {
        match self {
            ModelKind::Er => "er",
            ModelKind::Ws => "ws",
            ModelKind::Ba => "ba",
            ModelKind::Multistar => "multistar",
            ModelKind::Circulant => "circulant",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepModelKind {
    Er,
    Ws,
    Ba,
}

impl SweepModelKind {
    fn as_str(self) -> &'static str {
        match self {
            SweepModelKind::Er => "er",
            SweepModelKind::Ws => "ws",
            SweepModelKind::Ba => "ba",
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct GenerateArgs {
    /// Graph model: er, ws, ba, multistar, or circulant.
    #[arg(long, value_enum)]
    model: ModelKind,
    /// Node count.
    #[arg(long)]
    n: usize,
    /// Linking probability (er only).
    #[arg(long)]
    p: Option<f64>,
    /// Ring half-width (ws) or hub count (multistar, circulant).
    #[arg(long)]
    k: Option<usize>,
    /// Rewiring probability (ws only).
    #[arg(long)]
    beta: Option<f64>,
    /// Attachment count (ba only).
    #[arg(long)]
    ell: Option<usize>,
    /// RNG seed for er/ws/ba; one is drawn and reported when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Edge-list destination.
    #[arg(long, short)]
    output: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    /// Stochastic model to sweep: er, ws, or ba.
    #[arg(long, value_enum)]
    model: SweepModelKind,
    /// Node count.
    #[arg(long, default_value_t = 100)]
    n: usize,
    /// Replicates per grid point.
    #[arg(long, default_value_t = 25)]
    replicates: usize,
    /// ER probability grid step; the grid runs 0..=1.
    #[arg(long, default_value_t = 0.02)]
    p_step: f64,
    /// WS ring half-widths, comma separated (default 1,2,5,10,25,49 clipped to n).
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    /// WS rewiring grid step; the grid runs 0..=1.
    #[arg(long, default_value_t = 0.1)]
    beta_step: f64,
    /// BA attachment counts, comma separated (default: a mixed grid over 1..n).
    #[arg(long, value_delimiter = ',')]
    ell: Vec<usize>,
    /// Base RNG seed; one is drawn and recorded in the output when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// CSV (or JSON-lines) destination.
    #[arg(long, short)]
    output: PathBuf,
    /// Also write <output>_plot.py and <output>_boundary.csv beside the data.
    #[arg(long)]
    emit_plot: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report density, spectrum, and complexity of an edge-list file.
    Analyze {
        /// Edge list: a "n m" header line, then one "i j" pair per line.
        input: PathBuf,
    },
    /// Generate a graph, write its edge list, and report its plane point.
    Generate(GenerateArgs),
    /// Write the upper and lower boundary polylines for a node count.
    Boundary {
        /// Node count (at least 3).
        #[arg(long)]
        n: usize,
        /// CSV (or JSON-lines) destination.
        #[arg(long, short)]
        output: PathBuf,
        /// Also write <output>_plot.py beside the data.
        #[arg(long)]
        emit_plot: bool,
    },
    /// Run a replicate ensemble over a parameter grid, one row per point.
    Sweep(SweepArgs),
    /// Threshold labeled connectivity matrices and summarize each epoch set.
    Ingest {
        /// Manifest with one `label,path[,threshold]` line per epoch.
        manifest: PathBuf,
        /// Threshold for entries without their own; edges are strictly above.
        #[arg(long, default_value_t = 0.5)]
        threshold: f64,
        /// Summary destination; stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Parser)]
#[command(name = "croissant", version, about, max_term_width = 100)]
struct Cli {
    /// Output format for reported records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Analyze { input } => cmds::analyze(&input, format),
        Command::Generate(args) => cmds::generate(&args, format),
        Command::Boundary {
            n,
            output,
            emit_plot,
        } => cmds::boundary(n, &output, emit_plot, format),
        Command::Sweep(args) => cmds::sweep(&args, format),
        Command::Ingest {
            manifest,
            threshold,
            output,
        } => cmds::ingest(&manifest, threshold, output.as_deref(), format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let mut message = err.to_string();
            let mut source = std::error::Error::source(&err);
            while let Some(cause) = source {
                message.push_str(": ");
                message.push_str(&cause.to_string());
                source = cause.source();
            }
            eprintln!("error: {message}");
            ExitCode::from(err.exit_code())
        }
    }
}
