use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use expnet::Caps;

mod commands;
mod outcome;

use outcome::Outcome;

#[derive(Parser)]
#[command(name = "expnet", version, about = "Check, construct and measure expansive automata networks")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    /// Write a machine-readable JSON report to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Largest configuration space enumerated by brute-force checks.
    #[arg(long, global = true, default_value_t = Caps::DEFAULT_MAX_STATES)]
    max_states: usize,
    /// Largest number of observations enumerated by super-expansivity checks.
    #[arg(long, global = true, default_value_t = Caps::DEFAULT_MAX_OBSERVATIONS)]
    max_observations: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a property of a network file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Expansive)]
        mode: Mode,
        /// Graph whose in-neighborhoods are observed in quasi mode.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Query a graph file.
    Graph {
        file: PathBuf,
        /// Queries to run (all by default).
        #[arg(long = "query", value_enum)]
        queries: Vec<GraphQuery>,
        /// Exit with status 1 unless this property holds.
        #[arg(long, value_enum)]
        require: Vec<GraphProperty>,
    },
    /// Build a network and verify its claims.
    Construct(commands::ConstructArgs),
    /// Expansion time and frequency.
    Metrics {
        file: PathBuf,
        #[arg(long)]
        time: bool,
        #[arg(long)]
        frequency: bool,
    },
    /// Orbit array and code of a network.
    Code {
        file: PathBuf,
        /// Print the parameter header and every word.
        #[arg(long)]
        export: bool,
        /// Check orthogonal-array strength `s` at index 1.
        #[arg(long)]
        strength: Option<usize>,
        /// Print the minimum distance.
        #[arg(long)]
        distance: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Randomized search for a super-expansive linear network.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Mode {
    Expansive,
    Weak,
    Quasi,
    Strong,
    Super,
    LinearCriterion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphQuery {
    Strong,
    Coverable,
    TermRank,
    Decomposition,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GraphProperty {
    Strong,
    Coverable,
}

fn run(cli: Cli) -> Outcome {
    let caps = Caps { max_states: cli.caps.max_states, max_observations: cli.caps.max_observations };
    match cli.command {
        Command::Check { file, mode, graph } => commands::check(&file, mode, graph.as_deref(), &caps),
        Command::Graph { file, queries, require } => commands::graph(&file, &queries, &require),
        Command::Construct(args) => commands::construct(&args, &caps),
        Command::Metrics { file, time, frequency } => commands::metrics(&file, time, frequency, &caps),
        Command::Code { file, export, strength, distance, output } => {
            commands::code(&file, export, strength, distance, output.as_deref(), &caps)
        }
        Command::Search { n, q, seed, budget, output } => commands::search(n, q, seed, budget, output.as_deref(), &caps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let report = cli.report.clone();
    let outcome = run(cli);
    outcome.emit(report.as_deref())
}
