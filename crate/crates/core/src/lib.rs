//! Comparison-efficient solving of min-max problems.
//!
//! A min-max problem has a discrete structure and `n` totally ordered
//! comparables, and its answer is always one of the comparables. Given a
//! solver for the *ordered* version (one that is told the rank order of the
//! comparables), [`meta`] finds the answer with `O(n)` comparisons in
//! `O(log* n)` rounds of the ordered solver.
//!
//! Two applications ship with ordered solvers:
//!
//! - [`game`]: maximum payoff games, where Min pays Max the largest arc
//!   weight ever traversed.
//! - [`interdiction`] and [`global`]: widest-path interdiction with
//!   per-vertex or global removal budgets.
//!
//! Every solver has an independent brute-force or fixpoint oracle next to it.
//!
//! ```
//! use minmax_core::game::{solve_game, verify_strategies, GameArc, MaxPayoffGame, Player};
//! use minmax_core::{Algorithm, ComparableStore};
//!
//! let game = MaxPayoffGame {
//!     owners: vec![Player::Max, Player::Min, Player::Min],
//!     arcs: vec![
//!         GameArc { tail: 0, head: 1, weight: 0 },
//!         GameArc { tail: 0, head: 2, weight: 1 },
//!         GameArc { tail: 1, head: 1, weight: 2 },
//!         GameArc { tail: 2, head: 2, weight: 3 },
//!     ],
//!     start: 0,
//! };
//! let store = ComparableStore::new(vec![3, 7, 1, 2]);
//! let (report, strategies) = solve_game(&game, &store, Algorithm::Logstar).unwrap();
//! assert_eq!(report.outcome.key(&store), Some(7));
//! assert!(verify_strategies(&game, &store, &strategies));
//! ```

pub mod bench;
pub mod buckets;
pub mod circuit;
pub mod decimal;
pub mod flow;
pub mod game;
pub mod generate;
pub mod global;
pub mod instance_file;
pub mod interdiction;
pub mod meta;
pub mod order;
pub mod recurrence;
mod timing;
pub mod unionfind;

pub use decimal::Decimal;
pub use meta::{Algorithm, AnswerOutcome, CoarseInstance, OrderedProblem, SolveReport};
pub use order::ComparableStore;
