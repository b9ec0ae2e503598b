//! Comparison-count benchmarks on generated instances with `n` arcs and
//! about `n / 4` nodes.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::game::{solve_game, GameError};
use crate::generate::{random_game, random_network, GenerateError, NetworkShape};
use crate::global::GlobalInterdictionProblem;
use crate::interdiction::{solve_interdiction, InterdictionError};
use crate::meta::{self, Algorithm, SolveReport};
use crate::order::ComparableStore;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchProblem {
    Game,
    Interdict,
    /// Global budget of one removal.
    InterdictGlobal,
}

impl BenchProblem {
    pub const ALL: [BenchProblem; 3] = [
        BenchProblem::Game,
        BenchProblem::Interdict,
        BenchProblem::InterdictGlobal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchProblem::Game => "game",
            BenchProblem::Interdict => "interdict",
            BenchProblem::InterdictGlobal => "interdict-global",
        }
    }
}

impl fmt::Display for BenchProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchProblem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BenchProblem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown problem {s:?}"))
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Interdiction(#[from] InterdictionError),
    #[error(transparent)]
    Meta(#[from] meta::MetaError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub algorithm: Algorithm,
    pub trial: usize,
    pub comparisons: u64,
    pub iterations: usize,
    pub elapsed_ms: f64,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "n,algorithm,trial,comparisons,iterations,elapsed_ms";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3}",
            self.n, self.algorithm, self.trial, self.comparisons, self.iterations, self.elapsed_ms
        )
    }
}

/// Seed of one (size, trial) cell; every algorithm sees the same instance.
pub fn instance_seed(seed: u64, n: usize, trial: usize) -> u64 {
    seed ^ ((n as u64) << 24) ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Generates the instance for one cell and solves it.
pub fn run_one(problem: BenchProblem, n: usize, algorithm: Algorithm, seed: u64) -> Result<SolveReport, BenchError> {
    let nodes = (n / 4).max(1);
    match problem {
        BenchProblem::Game => {
            let (game, keys) = random_game(seed, nodes, n.max(1))?;
            let store = ComparableStore::new(keys);
            Ok(solve_game(&game, &store, algorithm)?.0)
        }
        BenchProblem::Interdict | BenchProblem::InterdictGlobal => {
            let shape = NetworkShape {
                vertices: nodes.max(2),
                arcs: n,
                budget_max: 1,
                ensure_path: true,
            };
            let (net, keys) = random_network(seed, shape)?;
            let store = ComparableStore::new(keys);
            if problem == BenchProblem::Interdict {
                Ok(solve_interdiction(&net, &store, algorithm)?.0)
            } else {
                let plug = GlobalInterdictionProblem::new(&net, 1, store.len())?;
                Ok(meta::solve(&plug, &store, algorithm)?)
            }
        }
    }
}

/// All rows of a sweep, in size-major order.
pub fn run(
    problem: BenchProblem,
    sizes: &[usize],
    algorithms: &[Algorithm],
    trials: usize,
    seed: u64,
) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::new();
    for &n in sizes {
        for trial in 0..trials {
            let cell = instance_seed(seed, n, trial);
            for &algorithm in algorithms {
                let report = run_one(problem, n, algorithm, cell)?;
                rows.push(BenchRow {
                    n,
                    algorithm,
                    trial,
                    comparisons: report.comparisons,
                    iterations: report.iterations,
                    elapsed_ms: report.elapsed.as_secs_f64() * 1e3,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithms_agree_on_each_cell() {
        for problem in BenchProblem::ALL {
            for n in [1, 5, 40] {
                let seed = instance_seed(3, n, 0);
                let outcomes: Vec<_> = Algorithm::ALL
                    .iter()
                    .map(|&a| run_one(problem, n, a, seed).unwrap().outcome)
                    .collect();
                assert!(
                    outcomes.windows(2).all(|w| w[0] == w[1]),
                    "{problem} n={n}: {outcomes:?}"
                );
            }
        }
    }

    #[test]
    fn rows_and_csv() {
        let rows = run(
            BenchProblem::Game,
            &[16, 32],
            &[Algorithm::Logstar, Algorithm::Sorted],
            2,
            0,
        )
        .unwrap();
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[0].n, 16);
        assert!(rows[0].csv().starts_with("16,logstar,0,"));
        assert_eq!(
            BenchRow::CSV_HEADER.split(',').count(),
            rows[0].csv().split(',').count()
        );
        assert_eq!(
            "interdict-global".parse::<BenchProblem>(),
            Ok(BenchProblem::InterdictGlobal)
        );
    }
}
