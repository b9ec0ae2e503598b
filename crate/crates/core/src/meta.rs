//! The generic min-max meta-solver.
//!
//! An [`OrderedProblem`] knows how to solve its instance when it is told the
//! relative order of the comparables, in the form of a [`CoarseInstance`]:
//! one rank label per position. The meta-solver narrows down the answer by
//! repeatedly grouping the still-possible comparables, collapsing everything
//! else, and asking the ordered solver which group holds the answer.
//!
//! Variants differ only in how many groups each round uses:
//!
//! - [`Algorithm::Sorted`]: sort everything, solve once.
//! - [`Algorithm::Bisect`]: two groups per round.
//! - [`Algorithm::Hybrid`]: bisect until `n_i * ceil(log2 n_i) <= n`, then sort the rest.
//! - [`Algorithm::Logstar`]: `2^k_i` groups with `k_i` growing like `2n / (n_i i^2)`;
//!   `O(n)` comparisons overall and `O(log* n)` rounds.
//! - [`Algorithm::Adaptive`]: `k_i` grows like `m / n_i` where `m` is the
//!   problem's work bound.
//!
//! Ordered solvers never see the store, so they cannot charge comparisons.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::order::{self, ComparableStore, OrderError};
use crate::timing::Stopwatch;

/// Result of a min-max solve: a comparable position, or the sentinel ranked
/// below every comparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AnswerOutcome {
    Answer(usize),
    BelowAll,
}

impl AnswerOutcome {
    pub fn position(self) -> Option<usize> {
        match self {
            AnswerOutcome::Answer(p) => Some(p),
            AnswerOutcome::BelowAll => None,
        }
    }

    /// The answered key, `None` for the sentinel. `Option`'s ordering puts the
    /// sentinel below every key.
    pub fn key<K: Ord + Clone>(self, store: &ComparableStore<K>) -> Option<K> {
        self.position().map(|p| store.key(p).clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetaError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("problem has {expected} comparables but the store holds {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("instance has no comparables")]
    Empty,
    #[error("ordered solver answered position {position} out of range")]
    AnswerOutOfRange { position: usize },
    #[error("ordered solver answered padding rank {rank}; the problem is not a min-max problem")]
    PaddingAnswer { rank: usize },
}

/// Rank labels for every comparable position plus one representative
/// position per rank. Higher rank means larger key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoarseInstance {
    rank_of: Vec<usize>,
    representative: Vec<usize>,
    has_below: bool,
    active_groups: usize,
}

impl CoarseInstance {
    /// Every comparable in its own rank, computed with the uncharged order.
    pub fn fully_refined<K: Ord>(store: &ComparableStore<K>) -> Self {
        let rank_of = store.uncharged_ranks();
        let mut representative = vec![0; rank_of.len()];
        for (p, &r) in rank_of.iter().enumerate() {
            representative[r] = p;
        }
        CoarseInstance {
            rank_of,
            active_groups: representative.len(),
            representative,
            has_below: false,
        }
    }

    /// Builds a coarse instance from explicit rank labels. Panics if a label
    /// is out of range or a representative does not carry its own rank.
    pub fn from_ranks(rank_of: Vec<usize>, representative: Vec<usize>) -> Self {
        for (r, &p) in representative.iter().enumerate() {
            assert_eq!(rank_of[p], r, "representative of rank {r} has another rank");
        }
        assert!(rank_of.iter().all(|&r| r < representative.len()));
        CoarseInstance {
            rank_of,
            active_groups: representative.len(),
            representative,
            has_below: false,
        }
    }

    pub fn comparable_count(&self) -> usize {
        self.rank_of.len()
    }

    pub fn rank_count(&self) -> usize {
        self.representative.len()
    }

    pub fn rank_of(&self, pos: usize) -> usize {
        self.rank_of[pos]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank_of
    }

    pub fn representative(&self, rank: usize) -> usize {
        self.representative[rank]
    }

    /// The outcome naming `rank`.
    pub fn answer(&self, rank: usize) -> AnswerOutcome {
        AnswerOutcome::Answer(self.representative[rank])
    }

    fn first_active_rank(&self) -> usize {
        usize::from(self.has_below)
    }
}

/// Builds the coarse instance for one round: `below` positions share the
/// lowest rank, each active group gets its own rank, `above` positions share
/// the top rank. Representatives are the group minimum, the minimum of
/// `below` and the maximum of `above`; finding them is charged.
pub fn coarsen<K: Ord>(
    store: &ComparableStore<K>,
    active: &[Vec<usize>],
    below: &[usize],
    above: &[usize],
) -> CoarseInstance {
    let below_rep = (!below.is_empty()).then(|| order::min_position(store, below));
    let above_rep = (!above.is_empty()).then(|| order::max_position(store, above));
    let mut rank_of = vec![usize::MAX; store.len()];
    for &p in below {
        rank_of[p] = 0;
    }
    let reps: Vec<usize> = active.iter().map(|g| order::min_position(store, g)).collect();
    build_coarse(rank_of, below_rep, active, &reps, above, above_rep)
}

fn build_coarse(
    mut rank_of: Vec<usize>,
    below_rep: Option<usize>,
    active: &[Vec<usize>],
    active_reps: &[usize],
    above: &[usize],
    above_rep: Option<usize>,
) -> CoarseInstance {
    let mut representative = Vec::with_capacity(active.len() + 2);
    representative.extend(below_rep);
    let offset = representative.len();
    for (j, group) in active.iter().enumerate() {
        for &p in group {
            rank_of[p] = offset + j;
        }
    }
    representative.extend_from_slice(active_reps);
    if let Some(rep) = above_rep {
        let top = representative.len();
        for &p in above {
            rank_of[p] = top;
        }
        representative.push(rep);
    }
    debug_assert!(rank_of.iter().all(|&r| r < representative.len()));
    CoarseInstance {
        rank_of,
        representative,
        has_below: below_rep.is_some(),
        active_groups: active.len(),
    }
}

/// Where an ordered answer falls among the active groups of a round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Located {
    Group(usize),
    BelowAll,
}

pub fn locate_group(outcome: AnswerOutcome, coarse: &CoarseInstance) -> Result<Located, MetaError> {
    match outcome {
        AnswerOutcome::BelowAll => Ok(Located::BelowAll),
        AnswerOutcome::Answer(position) => {
            let rank = *coarse
                .rank_of
                .get(position)
                .ok_or(MetaError::AnswerOutOfRange { position })?;
            let first = coarse.first_active_rank();
            if rank < first || rank >= first + coarse.active_groups {
                return Err(MetaError::PaddingAnswer { rank });
            }
            Ok(Located::Group(rank - first))
        }
    }
}

/// Plug-in contract: a min-max problem whose ordered version can be solved.
pub trait OrderedProblem {
    /// Number of comparables `n` the instance refers to.
    fn comparable_count(&self) -> usize;

    /// Estimate of the ordered solver's running time; at least `n`.
    fn work_bound(&self) -> u64;

    /// Solves the instance given only the rank labels of `coarse`.
    fn solve_ordered(&self, coarse: &CoarseInstance) -> AnswerOutcome;
}

impl<P: OrderedProblem + ?Sized> OrderedProblem for &P {
    fn comparable_count(&self) -> usize {
        (**self).comparable_count()
    }
    fn work_bound(&self) -> u64 {
        (**self).work_bound()
    }
    fn solve_ordered(&self, coarse: &CoarseInstance) -> AnswerOutcome {
        (**self).solve_ordered(coarse)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Sorted,
    Bisect,
    Hybrid,
    Logstar,
    Adaptive,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Sorted,
        Algorithm::Bisect,
        Algorithm::Hybrid,
        Algorithm::Logstar,
        Algorithm::Adaptive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Sorted => "sorted",
            Algorithm::Bisect => "bisect",
            Algorithm::Hybrid => "hybrid",
            Algorithm::Logstar => "logstar",
            Algorithm::Adaptive => "adaptive",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub outcome: AnswerOutcome,
    /// Charged comparisons of the whole session.
    pub comparisons: u64,
    /// Charged comparisons made while the ordered solver was running.
    pub ordered_solver_comparisons: u64,
    pub iterations: usize,
    pub group_counts: Vec<usize>,
    pub interval_sizes: Vec<usize>,
    pub elapsed: Duration,
}

pub fn solve<K: Ord, P: OrderedProblem>(
    problem: &P,
    store: &ComparableStore<K>,
    algorithm: Algorithm,
) -> Result<SolveReport, MetaError> {
    match algorithm {
        Algorithm::Sorted => solve_sorted(problem, store),
        Algorithm::Bisect => solve_bisect(problem, store),
        Algorithm::Hybrid => solve_hybrid(problem, store),
        Algorithm::Logstar => solve_logstar(problem, store),
        Algorithm::Adaptive => solve_adaptive(problem, store),
    }
}

/// Sort everything, then one fully refined ordered solve.
pub fn solve_sorted<K: Ord, P: OrderedProblem>(
    problem: &P,
    store: &ComparableStore<K>,
) -> Result<SolveReport, MetaError> {
    let n = check_sizes(problem, store)?;
    let watch = Stopwatch::start();
    let start = store.comparisons();
    let mut order: Vec<usize> = (0..n).collect();
    order::sort_unchecked(store, &mut order);
    let mut rank_of = vec![0; n];
    for (r, &p) in order.iter().enumerate() {
        rank_of[p] = r;
    }
    let coarse = CoarseInstance {
        rank_of,
        representative: order,
        has_below: false,
        active_groups: n,
    };
    let before = store.comparisons();
    let outcome = problem.solve_ordered(&coarse);
    let ordered_solver_comparisons = store.comparisons() - before;
    let outcome = match locate_group(outcome, &coarse)? {
        Located::BelowAll => AnswerOutcome::BelowAll,
        Located::Group(r) => coarse.answer(r),
    };
    Ok(SolveReport {
        outcome,
        comparisons: store.comparisons() - start,
        ordered_solver_comparisons,
        iterations: 1,
        group_counts: vec![n],
        interval_sizes: vec![n],
        elapsed: watch.elapsed(),
    })
}

/// Median bisection: two groups per round.
pub fn solve_bisect<K: Ord, P: OrderedProblem>(
    problem: &P,
    store: &ComparableStore<K>,
) -> Result<SolveReport, MetaError> {
    run_rounds(problem, store, Schedule::Bisect)
}

/// Bisection that sorts the remaining interval once `n_i * ceil(log2 n_i) <= n`.
pub fn solve_hybrid<K: Ord, P: OrderedProblem>(
    problem: &P,
    store: &ComparableStore<K>,
) -> Result<SolveReport, MetaError> {
    run_rounds(problem, store, Schedule::Hybrid)
}

/// `O(n)` comparisons and `O(log* n)` rounds.
pub fn solve_logstar<K: Ord, P: OrderedProblem>(
    problem: &P,
    store: &ComparableStore<K>,
) -> Result<SolveReport, MetaError> {
    run_rounds(problem, store, Schedule::Logstar)
}

/// Spends about the ordered solver's work bound on partitioning each round.
pub fn solve_adaptive<K: Ord, P: OrderedProblem>(
    problem: &P,
    store: &ComparableStore<K>,
) -> Result<SolveReport, MetaError> {
    let m = problem.work_bound().max(problem.comparable_count() as u64);
    run_rounds(problem, store, Schedule::Adaptive { work: m })
}

#[derive(Debug, Clone, Copy)]
enum Schedule {
    Bisect,
    Hybrid,
    Logstar,
    Adaptive { work: u64 },
}

impl Schedule {
    /// log2 of the number of groups in round `round` (1-based).
    fn split_exponent(self, round: usize, interval: usize, n: usize) -> u32 {
        let cap = ceil_log2(interval as u64);
        let wanted = match self {
            Schedule::Bisect | Schedule::Hybrid => 1,
            Schedule::Logstar => {
                let denom = interval as u128 * (round as u128).pow(2);
                ceil_div(2 * n as u128, denom).max(1)
            }
            Schedule::Adaptive { work } => ceil_div(work as u128, interval as u128).max(1),
        };
        wanted.min(cap as u128) as u32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Below,
    Active,
    Above,
}

fn run_rounds<K: Ord, P: OrderedProblem>(
    problem: &P,
    store: &ComparableStore<K>,
    schedule: Schedule,
) -> Result<SolveReport, MetaError> {
    let n = check_sizes(problem, store)?;
    let watch = Stopwatch::start();
    let start = store.comparisons();
    let mut ordered_solver_comparisons = 0;
    let mut group_counts = Vec::new();
    let mut interval_sizes = Vec::new();
    let mut side = vec![Side::Active; n];
    let mut active: Vec<usize> = (0..n).collect();
    let mut global_min = None;
    let mut global_max = None;
    let all: Vec<usize> = (0..n).collect();
    let mut round = 1;

    let outcome = loop {
        let interval = active.len();
        // a lone survivor is the answer only once some round has ruled out
        // "below everything"
        if interval == 1 && round > 1 {
            break AnswerOutcome::Answer(active[0]);
        }
        let finish_by_sorting =
            matches!(schedule, Schedule::Hybrid) && interval as u128 * ceil_log2(interval as u64) as u128 <= n as u128;
        let k = if finish_by_sorting {
            ceil_log2(interval as u64)
        } else {
            schedule.split_exponent(round, interval, n)
        };

        let groups = if (1usize << k) >= interval {
            order::sort_unchecked(store, &mut active);
            active.iter().map(|&p| vec![p]).collect::<Vec<_>>()
        } else {
            order::split_unchecked(store, &mut active, 1 << k)
        };
        let reps: Vec<usize> = groups.iter().map(|g| order::min_position(store, g)).collect();

        let mut rank_of = vec![usize::MAX; n];
        let mut below_rep = None;
        let mut above = Vec::new();
        for (p, s) in side.iter().enumerate() {
            match s {
                Side::Below => rank_of[p] = 0,
                Side::Above => above.push(p),
                Side::Active => {}
            }
        }
        if side.contains(&Side::Below) {
            below_rep = Some(*global_min.get_or_insert_with(|| order::min_position(store, &all)));
        }
        let above_rep = if above.is_empty() {
            None
        } else {
            Some(*global_max.get_or_insert_with(|| order::max_position(store, &all)))
        };
        let coarse = build_coarse(rank_of, below_rep, &groups, &reps, &above, above_rep);

        interval_sizes.push(interval);
        group_counts.push(groups.len());
        let before = store.comparisons();
        let answer = problem.solve_ordered(&coarse);
        ordered_solver_comparisons += store.comparisons() - before;

        match locate_group(answer, &coarse)? {
            Located::BelowAll => break AnswerOutcome::BelowAll,
            Located::Group(j) => {
                for (idx, g) in groups.iter().enumerate() {
                    if idx == j {
                        continue;
                    }
                    let s = if idx < j { Side::Below } else { Side::Above };
                    for &p in g {
                        side[p] = s;
                    }
                }
                active = groups.into_iter().nth(j).expect("located group exists");
            }
        }
        round += 1;
    };

    Ok(SolveReport {
        outcome,
        comparisons: store.comparisons() - start,
        ordered_solver_comparisons,
        iterations: interval_sizes.len(),
        group_counts,
        interval_sizes,
        elapsed: watch.elapsed(),
    })
}

fn check_sizes<K: Ord, P: OrderedProblem>(problem: &P, store: &ComparableStore<K>) -> Result<usize, MetaError> {
    let n = store.len();
    if problem.comparable_count() != n {
        return Err(MetaError::SizeMismatch {
            expected: problem.comparable_count(),
            got: n,
        });
    }
    if n == 0 {
        return Err(MetaError::Empty);
    }
    Ok(n)
}

pub(crate) fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

/// The `rank`-th smallest comparable (0-based). The simplest min-max problem;
/// its ordered version is a counting pass, so the work bound is `n`.
#[derive(Debug, Clone, Copy)]
pub struct OrderStatistic {
    pub n: usize,
    pub rank: usize,
}

impl OrderedProblem for OrderStatistic {
    fn comparable_count(&self) -> usize {
        self.n
    }

    fn work_bound(&self) -> u64 {
        self.n as u64
    }

    fn solve_ordered(&self, coarse: &CoarseInstance) -> AnswerOutcome {
        let mut counts = vec![0usize; coarse.rank_count()];
        for &r in coarse.ranks() {
            counts[r] += 1;
        }
        let mut seen = 0;
        for (r, c) in counts.into_iter().enumerate() {
            seen += c;
            if seen > self.rank {
                return coarse.answer(r);
            }
        }
        unreachable!("rank {} beyond {} comparables", self.rank, self.n)
    }
}
