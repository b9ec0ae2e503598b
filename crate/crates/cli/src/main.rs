use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minmax_core::bench::{self, BenchProblem, BenchRow};
use minmax_core::game::{attractor_value_oracle, solve_game, GameError};
use minmax_core::generate::{key_literal, random_game, random_network, NetworkShape};
use minmax_core::global::{brute_force_global, GlobalInterdictionProblem};
use minmax_core::instance_file::{parse_instance, write_game, write_network, Instance, InstanceError};
use minmax_core::interdiction::{brute_force_interdiction, solve_interdiction, InterdictionError, DEFAULT_GUARD};
use minmax_core::meta::{self, MetaError};
use minmax_core::{Algorithm, ComparableStore};

mod check;
mod report;

use report::RunReport;

#[derive(Parser)]
#[command(name = "minmax", version, about = "Comparison-efficient min-max solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file with a meta-solver.
    Solve(SolveArgs),
    /// Ground-truth value from the brute-force or fixpoint oracle.
    Oracle(OracleArgs),
    /// Print a random instance file.
    Gen(GenArgs),
    /// Comparison-count benchmark as CSV.
    Bench(BenchArgs),
    /// Self-contained property checks.
    Check(check::CheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    Game,
    Interdict,
    InterdictGlobal,
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(long, value_enum)]
    problem: Problem,
    #[arg(long)]
    file: PathBuf,
    /// Global removal budget (interdict-global only).
    #[arg(long)]
    k: Option<usize>,
    /// Print a single JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, default_value = "logstar")]
    algorithm: Algorithm,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Maximum number of removal combinations to enumerate.
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenProblem {
    Game,
    #[value(alias = "interdict", alias = "interdict-global")]
    Network,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    problem: GenProblem,
    /// Node and arc counts.
    #[arg(long, num_args = 2, value_names = ["V", "E"], required = true)]
    size: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Per-vertex budgets are drawn from 0..=B.
    #[arg(long, default_value_t = 0)]
    budget_max: usize,
    /// Start the arc list with a random source-sink path.
    #[arg(long)]
    ensure_path: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    problem: BenchProblem,
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "sorted,bisect,hybrid,logstar,adaptive")]
    algorithms: Vec<Algorithm>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    trials: usize,
}

/// A failed command and its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<InstanceError> for Failure {
    fn from(e: InstanceError) -> Self {
        let code = match e {
            InstanceError::Parse { .. } => 2,
            InstanceError::Invalid { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<InterdictionError> for Failure {
    fn from(e: InterdictionError) -> Self {
        let code = match e {
            InterdictionError::GuardExceeded { .. } => 4,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        Failure::invalid(e.to_string())
    }
}

impl From<MetaError> for Failure {
    fn from(e: MetaError) -> Self {
        Failure::invalid(e.to_string())
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn wrong_kind(problem: Problem) -> Failure {
    let expected = if problem == Problem::Game { "game" } else { "network" };
    Failure::usage(format!("--problem expects a {expected} file"))
}

fn global_k(args: &InstanceArgs) -> Result<usize, Failure> {
    args.k.ok_or_else(|| Failure::usage("interdict-global needs --k"))
}

fn cmd_solve(args: &SolveArgs) -> Result<String, Failure> {
    let a = &args.instance;
    let alg = args.algorithm;
    let report = match (a.problem, load(&a.file)?) {
        (Problem::Game, Instance::Game { game, keys }) => {
            let store = ComparableStore::new(keys);
            let (rep, sol) = solve_game(&game, &store, alg)?;
            RunReport::from_solve("game", alg, &store, &rep).with_strategies(sol)
        }
        (Problem::Interdict, Instance::Network { net, keys }) => {
            let store = ComparableStore::new(keys);
            let (rep, sol) = solve_interdiction(&net, &store, alg)?;
            RunReport::from_solve("interdict", alg, &store, &rep).with_interdiction(sol)
        }
        (Problem::InterdictGlobal, Instance::Network { net, keys }) => {
            let k = global_k(a)?;
            let store = ComparableStore::new(keys);
            let problem = GlobalInterdictionProblem::new(&net, k, store.len())?;
            let rep = meta::solve(&problem, &store, alg)?;
            RunReport::from_solve("interdict-global", alg, &store, &rep)
        }
        (p, _) => return Err(wrong_kind(p)),
    };
    Ok(report.render(a.json))
}

fn cmd_oracle(args: &OracleArgs) -> Result<String, Failure> {
    let a = &args.instance;
    let instance = load(&a.file)?;
    let started = Instant::now();
    let (name, store, outcome) = match (a.problem, instance) {
        (Problem::Game, Instance::Game { game, keys }) => {
            let store = ComparableStore::new(keys);
            minmax_core::game::validate_game(&game, store.len())
                .map_err(|d| Failure::invalid(d.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")))?;
            let value = attractor_value_oracle(&game, &store);
            ("game", store, value)
        }
        (Problem::Interdict, Instance::Network { net, keys }) => {
            let store = ComparableStore::new(keys);
            let value = brute_force_interdiction(&net, &store, args.guard)?;
            ("interdict", store, value)
        }
        (Problem::InterdictGlobal, Instance::Network { net, keys }) => {
            let k = global_k(a)?;
            let store = ComparableStore::new(keys);
            let value = brute_force_global(&net, &store, k, args.guard)?;
            ("interdict-global", store, value)
        }
        (p, _) => return Err(wrong_kind(p)),
    };
    Ok(RunReport::from_oracle(name, &store, outcome, started.elapsed()).render(a.json))
}

fn cmd_gen(args: &GenArgs) -> Result<String, Failure> {
    let (v, e) = (args.size[0], args.size[1]);
    match args.problem {
        GenProblem::Game => {
            let (game, keys) = random_game(args.seed, v, e).map_err(|err| Failure::usage(err.to_string()))?;
            Ok(write_game(&game, &literals(&keys)))
        }
        GenProblem::Network => {
            let shape = NetworkShape {
                vertices: v,
                arcs: e,
                budget_max: args.budget_max,
                ensure_path: args.ensure_path,
            };
            let (net, keys) = random_network(args.seed, shape).map_err(|err| Failure::usage(err.to_string()))?;
            Ok(write_network(&net, &literals(&keys)))
        }
    }
}

fn literals(keys: &[u64]) -> Vec<String> {
    keys.iter().map(|&k| key_literal(k)).collect()
}

fn cmd_bench(args: &BenchArgs) -> Result<String, Failure> {
    if args.sizes.contains(&0) {
        return Err(Failure::usage("sizes must be positive"));
    }
    let rows = bench::run(args.problem, &args.sizes, &args.algorithms, args.trials, args.seed)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let mut out = String::from(BenchRow::CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv());
        out.push('\n');
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Check(a) => check::run(a),
    };
    match result {
        Ok(out) => {
            // a closed pipe is not worth a panic
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
