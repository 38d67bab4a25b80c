//! `vrel`: generate graph datasets, recommend edge insertions, evaluate and
//! time the insertion heuristics.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use vrel_core::generators::DatasetSpec;

#[derive(Debug, Parser)]
#[command(name = "vrel", version, about = "Vertex-reliability edge-insertion toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a dataset of connected, pendant-free, pairwise non-isomorphic graphs.
    Generate(GenerateArgs),
    /// Propose insertions for one graph (.el edge list or .g6 graph6).
    Recommend(RecommendArgs),
    /// Score every heuristic on a dataset and write report files.
    Evaluate(EvaluateArgs),
    /// Time the heuristics on a dataset.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Vertex counts, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub orders: Vec<usize>,
    /// Erdős–Rényi graphs per order.
    #[arg(long, default_value_t = 0)]
    pub er: usize,
    /// Barabási–Albert graphs per order.
    #[arg(long, default_value_t = 0)]
    pub ba: usize,
    /// Watts–Strogatz graphs per order.
    #[arg(long, default_value_t = 0)]
    pub ws: usize,
    #[arg(long, default_value_t = DatasetSpec::DEFAULT_ER_P)]
    pub er_p: f64,
    #[arg(long, default_value_t = DatasetSpec::DEFAULT_BA_M)]
    pub ba_m: usize,
    #[arg(long, default_value_t = DatasetSpec::DEFAULT_WS_K)]
    pub ws_k: usize,
    #[arg(long, default_value_t = DatasetSpec::DEFAULT_WS_BETA)]
    pub ws_beta: f64,
    /// Consecutive rejections tolerated per cell before giving up.
    #[arg(long, default_value_t = DatasetSpec::DEFAULT_MAX_ATTEMPTS)]
    pub max_attempts: u64,
    /// Master seed (required).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory.
    #[arg(long, default_value = "dataset")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct RecommendArgs {
    pub graph: PathBuf,
    /// Heuristic ids, comma-separated (default: every heuristic that runs on a graph alone).
    #[arg(long, value_delimiter = ',')]
    pub heuristics: Vec<String>,
    /// Also report the exact score F and, with --p, the reliability of each supergraph.
    #[arg(long)]
    pub exact: bool,
    /// Vertex survival probability for the reliability value.
    #[arg(long)]
    pub p: Option<f64>,
    /// Seed for the random heuristic (it is skipped by default without one).
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    pub format: TextFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TestMode {
    Auto,
    Exact,
    Normal,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    pub dataset: PathBuf,
    /// Seed for the random heuristic (required).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::All)]
    pub format: ReportFormat,
    /// Signed-rank p-value computation.
    #[arg(long, value_enum, default_value_t = TestMode::Auto)]
    pub wilcoxon: TestMode,
    #[arg(long, default_value = "report")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub dataset: PathBuf,
    /// Runs per graph and heuristic; the fastest is kept.
    #[arg(long, default_value_t = 1)]
    pub repetitions: usize,
    /// Heuristic ids, comma-separated (default: alpha,beta,gamma,delta,phi,random,phi-cap).
    #[arg(long, value_delimiter = ',')]
    pub heuristics: Vec<String>,
    /// Seed for the random heuristic (required).
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = ReportFormat::All)]
    pub format: ReportFormat,
    #[arg(long, default_value = "bench")]
    pub out: PathBuf,
}

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(anyhow::Error),
    Data(anyhow::Error),
    Budget(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Data(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn error(&self) -> &anyhow::Error {
        match self {
            Failure::Usage(e) | Failure::Data(e) | Failure::Budget(e) => e,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.command {
        Command::Generate(a) => commands::generate(&a),
        Command::Recommend(a) => commands::recommend(&a),
        Command::Evaluate(a) => commands::evaluate(&a),
        Command::Bench(a) => commands::bench(&a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error());
            ExitCode::from(f.code())
        }
    }
}
