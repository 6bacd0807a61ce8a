mod commands;
mod config;
mod failure;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use failure::Failure;

/// Lattice wirings of trees with maximal degree 3.
#[derive(Debug, Parser)]
#[command(name = "latwire", version, args_override_self = true)]
struct Cli {
    /// Seed for every random choice; recorded in output metadata.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a tree from one of the built-in families.
    #[command(args_override_self = true)]
    Gen(GenArgs),
    /// Run the placement on a tree.
    #[command(args_override_self = true)]
    Wire(WireArgs),
    /// Check an embedding against the k-wiring conditions.
    #[command(args_override_self = true)]
    Verify(VerifyArgs),
    /// Tabulate the spiral sums and the recurrence.
    #[command(args_override_self = true)]
    Analyze(AnalyzeArgs),
    /// Wire random trees and summarize volume per vertex.
    #[command(args_override_self = true)]
    Bench(BenchArgs),
    /// Compare the placement with brute-force optimal wirings of small trees.
    #[command(args_override_self = true)]
    Oracle(OracleArgs),
    /// Draw the wiring of a tree as SVG.
    #[command(args_override_self = true)]
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Bn,
    Sn,
    Random,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFamily {
    Random,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WireFormat {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TreeSource {
    /// File holding tree text, or `-` for standard input.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Tree text given inline, e.g. "(()())".
    #[arg(long)]
    tree: Option<String>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Height for bn and sn, vertex count for random and path.
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
pub struct WireArgs {
    #[command(flatten)]
    source: TreeSource,
    #[arg(long, value_enum, default_value_t = WireFormat::Json)]
    format: WireFormat,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    source: TreeSource,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Embedding JSON file, or `-` for standard input.
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(3..=4096))]
    n_max: u64,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated tree sizes.
    #[arg(long, value_delimiter = ',', required = true,
          value_parser = clap::value_parser!(u64).range(1..=10_000_000))]
    sizes: Vec<u64>,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, value_enum, default_value_t = BenchFamily::Random)]
    family: BenchFamily,
    /// Add a wall-clock column; the output is then no longer reproducible.
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=7))]
    max_n: u64,
    /// Search nodes allowed per tree.
    #[arg(long, default_value_t = 20_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = OracleFormat::Text)]
    format: OracleFormat,
    #[command(flatten)]
    out: Output,
}

/// Provenance recorded in every output.
pub struct Meta {
    pub command: String,
    pub seed: u64,
}

impl Meta {
    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "seed": self.seed,
        })
    }

    /// `# `-prefixed header lines for text and CSV outputs.
    pub fn header(&self) -> String {
        format!(
            "# latwire {}\n# command: {}\n# seed: {}\n",
            env!("CARGO_PKG_VERSION"),
            self.command,
            self.seed
        )
    }
}

fn run(raw: Vec<OsString>) -> Result<(), Failure> {
    let command = raw
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let args = config::expand(raw)?;
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            e.print().ok();
            // Help and version requests are not failures.
            return if code == 0 {
                Ok(())
            } else {
                Err(Failure::Usage(String::new()))
            };
        }
    };
    let meta = Meta {
        command,
        seed: cli.seed,
    };
    match cli.command {
        Command::Gen(a) => commands::gen(&a, &meta),
        Command::Wire(a) => commands::wire(&a, &meta),
        Command::Render(a) => commands::render(&a, &meta),
        Command::Verify(a) => commands::verify(&a),
        Command::Analyze(a) => commands::analyze(&a, &meta),
        Command::Bench(a) => commands::bench(&a, &meta),
        Command::Oracle(a) => commands::oracle(&a, &meta),
    }
}

fn main() -> ExitCode {
    match run(std::env::args_os().collect()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let message = failure.to_string();
            if !message.is_empty() {
                eprintln!("latwire: {message}");
            }
            failure.code()
        }
    }
}
