//! Widest-path interdiction with per-vertex budgets.
//!
//! The interdictor removes, at every vertex `v`, a set of out-arcs allowed by
//! the vertex budget (at most `k(v)` arcs by default) so that the widest
//! `s`-`t` path becomes as narrow as possible.
//!
//! The ordered solver grows a super-node around `t`. It repeatedly takes a
//! widest arc `e = (v, T)` entering the super-node: if `v` may still remove
//! `e` it does so, otherwise `v` is reached at width `c(e)` and joins the
//! super-node, its incoming arcs capped at `c(e)`. Extracted ranks never
//! increase, so a bucket array replaces a heap.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::buckets::MonotoneBuckets;
use crate::meta::{self, Algorithm, AnswerOutcome, CoarseInstance, MetaError, OrderedProblem, SolveReport};
use crate::order::ComparableStore;

/// Default limit on the number of cases a brute-force oracle may enumerate.
pub const DEFAULT_GUARD: u64 = 1_000_000;

/// Per-vertex feasibility of removal sets. Must be downward closed: every
/// subset of a feasible set is feasible.
pub trait BudgetOracle: fmt::Debug + Send + Sync {
    /// Whether removing exactly the arcs `removed` (all leaving `vertex`) is allowed.
    fn allows(&self, vertex: usize, removed: &[usize]) -> bool;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NetArc {
    pub tail: usize,
    pub head: usize,
    /// Position of the arc's capacity in the comparable store.
    pub capacity: usize,
}

#[derive(Debug, Clone)]
pub struct InterdictionNetwork {
    pub vertex_count: usize,
    pub arcs: Vec<NetArc>,
    pub source: usize,
    pub sink: usize,
    /// `k(v)`: how many out-arcs of `v` may be removed.
    pub budgets: Vec<usize>,
    /// Replaces the cardinality budgets when set.
    pub budget_oracle: Option<Arc<dyn BudgetOracle>>,
}

impl PartialEq for InterdictionNetwork {
    fn eq(&self, other: &Self) -> bool {
        let same_oracle = match (&self.budget_oracle, &other.budget_oracle) {
            (None, None) => true,
            (Some(a), Some(b)) => Arc::ptr_eq(a, b),
            _ => false,
        };
        same_oracle
            && self.vertex_count == other.vertex_count
            && self.arcs == other.arcs
            && self.source == other.source
            && self.sink == other.sink
            && self.budgets == other.budgets
    }
}

impl InterdictionNetwork {
    /// Network with all budgets zero.
    pub fn new(vertex_count: usize, arcs: Vec<NetArc>, source: usize, sink: usize) -> Self {
        InterdictionNetwork {
            vertex_count,
            arcs,
            source,
            sink,
            budgets: vec![0; vertex_count],
            budget_oracle: None,
        }
    }

    pub fn with_budgets(mut self, budgets: Vec<usize>) -> Self {
        self.budgets = budgets;
        self
    }

    pub fn allows_removal(&self, vertex: usize, removed: &[usize]) -> bool {
        match &self.budget_oracle {
            Some(oracle) => oracle.allows(vertex, removed),
            None => removed.len() <= self.budgets[vertex],
        }
    }

    pub(crate) fn out_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for (i, a) in self.arcs.iter().enumerate() {
            out[a.tail].push(i);
        }
        out
    }

    fn in_arcs(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, a) in self.arcs.iter().enumerate() {
            inc[a.head].push(i);
        }
        inc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum NetworkDiagnostic {
    #[error("network has no vertices")]
    NoVertices,
    #[error("source {0} out of range")]
    SourceOutOfRange(usize),
    #[error("sink {0} out of range")]
    SinkOutOfRange(usize),
    #[error("source and sink are both {0}")]
    SourceIsSink(usize),
    #[error("arc {arc}: tail {vertex} out of range")]
    TailOutOfRange { arc: usize, vertex: usize },
    #[error("arc {arc}: head {vertex} out of range")]
    HeadOutOfRange { arc: usize, vertex: usize },
    #[error("arc {arc}: capacity position {position} out of range")]
    CapacityOutOfRange { arc: usize, position: usize },
    #[error("{got} budgets given for {expected} vertices")]
    BudgetCount { expected: usize, got: usize },
    #[error("vertex {vertex}: negative budget {budget}")]
    NegativeBudget { vertex: usize, budget: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterdictionError {
    #[error("invalid network: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<NetworkDiagnostic>),
    #[error(transparent)]
    Meta(#[from] MetaError),
    #[error("enumeration needs {needed} cases, guard is {guard}")]
    GuardExceeded { needed: u64, guard: u64 },
}

pub fn validate_network(net: &InterdictionNetwork, comparables: usize) -> Result<(), Vec<NetworkDiagnostic>> {
    let mut diags = Vec::new();
    let v = net.vertex_count;
    if v == 0 {
        diags.push(NetworkDiagnostic::NoVertices);
    }
    if net.source >= v {
        diags.push(NetworkDiagnostic::SourceOutOfRange(net.source));
    }
    if net.sink >= v {
        diags.push(NetworkDiagnostic::SinkOutOfRange(net.sink));
    }
    if net.source == net.sink {
        diags.push(NetworkDiagnostic::SourceIsSink(net.source));
    }
    if net.budgets.len() != v {
        diags.push(NetworkDiagnostic::BudgetCount {
            expected: v,
            got: net.budgets.len(),
        });
    }
    for (i, a) in net.arcs.iter().enumerate() {
        if a.tail >= v {
            diags.push(NetworkDiagnostic::TailOutOfRange { arc: i, vertex: a.tail });
        }
        if a.head >= v {
            diags.push(NetworkDiagnostic::HeadOutOfRange { arc: i, vertex: a.head });
        }
        if a.capacity >= comparables {
            diags.push(NetworkDiagnostic::CapacityOutOfRange {
                arc: i,
                position: a.capacity,
            });
        }
    }
    if diags.is_empty() {
        Ok(())
    } else {
        Err(diags)
    }
}

/// Interdicted width from the rank order of the capacities alone.
pub fn ordered_solve_interdiction(
    net: &InterdictionNetwork,
    coarse: &CoarseInstance,
) -> Result<AnswerOutcome, InterdictionError> {
    validate_network(net, coarse.comparable_count()).map_err(InterdictionError::Invalid)?;
    Ok(greedy(net, coarse, None))
}

fn greedy(net: &InterdictionNetwork, coarse: &CoarseInstance, mut removed: Option<&mut Vec<usize>>) -> AnswerOutcome {
    let in_arcs = net.in_arcs();
    let mut merged = vec![false; net.vertex_count];
    merged[net.sink] = true;
    let mut removed_at: Vec<Vec<usize>> = vec![Vec::new(); net.vertex_count];
    let mut buckets = MonotoneBuckets::new(coarse.rank_count());
    for &x in &in_arcs[net.sink] {
        let a = net.arcs[x];
        if !merged[a.tail] {
            buckets.push(coarse.rank_of(a.capacity), x);
        }
    }

    while let Some((rank, e)) = buckets.pop_max() {
        let v = net.arcs[e].tail;
        if merged[v] {
            continue;
        }
        removed_at[v].push(e);
        if net.allows_removal(v, &removed_at[v]) {
            if let Some(r) = removed.as_deref_mut() {
                r.push(e);
            }
            continue;
        }
        removed_at[v].pop();
        if v == net.source {
            return coarse.answer(rank);
        }
        merged[v] = true;
        for &x in &in_arcs[v] {
            let a = net.arcs[x];
            if !merged[a.tail] {
                buckets.push(coarse.rank_of(a.capacity).min(rank), x);
            }
        }
    }
    AnswerOutcome::BelowAll
}

/// Largest rank threshold at which `t` is reachable from `s` over live arcs,
/// by binary search over the arcs' ranks.
pub(crate) fn widest_rank(net: &InterdictionNetwork, ranks: &[usize], live: &[bool]) -> Option<usize> {
    let mut thresholds: Vec<usize> = net
        .arcs
        .iter()
        .zip(live)
        .filter(|(_, &l)| l)
        .map(|(a, _)| ranks[a.capacity])
        .collect();
    thresholds.sort_unstable();
    thresholds.dedup();
    let out = net.out_arcs();
    let reaches = |min_rank: usize| {
        let mut seen = vec![false; net.vertex_count];
        seen[net.source] = true;
        let mut stack = vec![net.source];
        while let Some(u) = stack.pop() {
            if u == net.sink {
                return true;
            }
            for &x in &out[u] {
                let a = net.arcs[x];
                if live[x] && ranks[a.capacity] >= min_rank && !seen[a.head] {
                    seen[a.head] = true;
                    stack.push(a.head);
                }
            }
        }
        false
    };
    if thresholds.is_empty() || !reaches(thresholds[0]) {
        return None;
    }
    // invariant: reaches(thresholds[lo]), !reaches(thresholds[hi]) if hi < len
    let (mut lo, mut hi) = (0, thresholds.len());
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if reaches(thresholds[mid]) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(thresholds[lo])
}

fn position_of_rank(net: &InterdictionNetwork, ranks: &[usize], rank: usize) -> usize {
    net.arcs
        .iter()
        .map(|a| a.capacity)
        .find(|&p| ranks[p] == rank)
        .expect("rank belongs to an arc")
}

fn widest_on(net: &InterdictionNetwork, ranks: &[usize], live: &[bool]) -> AnswerOutcome {
    match widest_rank(net, ranks, live) {
        Some(r) => AnswerOutcome::Answer(position_of_rank(net, ranks, r)),
        None => AnswerOutcome::BelowAll,
    }
}

/// Width of the widest uninterdicted `s`-`t` path (uncharged).
pub fn widest_path<K: Ord>(net: &InterdictionNetwork, store: &ComparableStore<K>) -> AnswerOutcome {
    let ranks = store.uncharged_ranks();
    widest_on(net, &ranks, &vec![true; net.arcs.len()])
}

/// Feasible removal sets at each vertex other than the sink.
fn feasible_removals(net: &InterdictionNetwork, guard: u64) -> Result<Vec<Vec<Vec<usize>>>, InterdictionError> {
    let out = net.out_arcs();
    let mut per_vertex = Vec::with_capacity(net.vertex_count);
    let mut total: u64 = 1;
    for (v, arcs) in out.iter().enumerate() {
        if v == net.sink {
            per_vertex.push(vec![Vec::new()]);
            continue;
        }
        if arcs.len() >= 40 {
            return Err(InterdictionError::GuardExceeded {
                needed: u64::MAX,
                guard,
            });
        }
        let mut sets = Vec::new();
        for mask in 0u64..(1 << arcs.len()) {
            let chosen: Vec<usize> = arcs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            if net.allows_removal(v, &chosen) {
                sets.push(chosen);
            }
            if sets.len() as u64 > guard {
                return Err(InterdictionError::GuardExceeded {
                    needed: sets.len() as u64,
                    guard,
                });
            }
        }
        total = total.saturating_mul(sets.len() as u64);
        if total > guard {
            return Err(InterdictionError::GuardExceeded { needed: total, guard });
        }
        per_vertex.push(sets);
    }
    Ok(per_vertex)
}

/// Calls `visit` with the removal mask of every feasible combination. Stops
/// early when `visit` returns false.
pub(crate) fn for_each_removal(
    net: &InterdictionNetwork,
    guard: u64,
    mut visit: impl FnMut(&[bool]) -> bool,
) -> Result<(), InterdictionError> {
    let choices = feasible_removals(net, guard)?;
    let mut idx = vec![0usize; choices.len()];
    let mut live = vec![true; net.arcs.len()];
    loop {
        live.iter_mut().for_each(|l| *l = true);
        for (v, &i) in idx.iter().enumerate() {
            for &x in &choices[v][i] {
                live[x] = false;
            }
        }
        if !visit(&live) {
            return Ok(());
        }
        // odometer step
        let mut v = 0;
        loop {
            if v == idx.len() {
                return Ok(());
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

/// Ground truth by enumerating every feasible removal combination.
pub fn brute_force_interdiction<K: Ord>(
    net: &InterdictionNetwork,
    store: &ComparableStore<K>,
    guard: u64,
) -> Result<AnswerOutcome, InterdictionError> {
    validate_network(net, store.len()).map_err(InterdictionError::Invalid)?;
    let ranks = store.uncharged_ranks();
    let mut best: Option<Option<usize>> = None;
    for_each_removal(net, guard, |live| {
        let w = widest_rank(net, &ranks, live);
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
        w.is_some()
    })?;
    Ok(match best.flatten() {
        Some(r) => AnswerOutcome::Answer(position_of_rank(net, &ranks, r)),
        None => AnswerOutcome::BelowAll,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterdictionSolution {
    pub width: AnswerOutcome,
    /// Removed arc ids, ascending.
    pub removed: Vec<usize>,
    /// Arc ids of an `s`-`t` path in the residual network attaining the width.
    pub witness_path: Option<Vec<usize>>,
}

impl InterdictionSolution {
    pub fn removed_by_vertex(&self, net: &InterdictionNetwork) -> Vec<Vec<usize>> {
        let mut by = vec![Vec::new(); net.vertex_count];
        for &x in &self.removed {
            by[net.arcs[x].tail].push(x);
        }
        by
    }
}

/// Checks budgets, the residual width and the witness path. Does not check
/// optimality.
pub fn verify_interdiction<K: Ord>(
    net: &InterdictionNetwork,
    store: &ComparableStore<K>,
    solution: &InterdictionSolution,
) -> bool {
    if solution.removed.iter().any(|&x| x >= net.arcs.len()) {
        return false;
    }
    let by_vertex = solution.removed_by_vertex(net);
    if by_vertex
        .iter()
        .enumerate()
        .any(|(v, r)| !r.is_empty() && (v == net.sink || !net.allows_removal(v, r)))
    {
        return false;
    }
    let mut live = vec![true; net.arcs.len()];
    for &x in &solution.removed {
        live[x] = false;
    }
    let ranks = store.uncharged_ranks();
    if widest_on(net, &ranks, &live) != solution.width {
        return false;
    }
    match (solution.width, &solution.witness_path) {
        (AnswerOutcome::BelowAll, None) => true,
        (AnswerOutcome::Answer(p), Some(path)) => {
            let mut at = net.source;
            for &x in path {
                if x >= net.arcs.len() || !live[x] || net.arcs[x].tail != at {
                    return false;
                }
                at = net.arcs[x].head;
            }
            at == net.sink && path.iter().map(|&x| ranks[net.arcs[x].capacity]).min() == Some(ranks[p])
        }
        _ => false,
    }
}

/// A validated network as a meta-solver plug-in. Work bound `|E|`.
#[derive(Debug, Clone, Copy)]
pub struct InterdictionProblem<'a> {
    net: &'a InterdictionNetwork,
    comparables: usize,
}

impl<'a> InterdictionProblem<'a> {
    pub fn new(net: &'a InterdictionNetwork, comparables: usize) -> Result<Self, InterdictionError> {
        validate_network(net, comparables).map_err(InterdictionError::Invalid)?;
        Ok(InterdictionProblem { net, comparables })
    }
}

impl OrderedProblem for InterdictionProblem<'_> {
    fn comparable_count(&self) -> usize {
        self.comparables
    }

    fn work_bound(&self) -> u64 {
        self.net.arcs.len().max(self.comparables) as u64
    }

    fn solve_ordered(&self, coarse: &CoarseInstance) -> AnswerOutcome {
        greedy(self.net, coarse, None)
    }
}

/// Collapses the keys into the classes below, equal to and above `pivot`
/// (or a single class when there is no pivot).
fn pivot_coarse(ranks: &[usize], pivot: Option<usize>) -> CoarseInstance {
    let n = ranks.len();
    let Some(p) = pivot else {
        return CoarseInstance::from_ranks(vec![0; n], vec![0]);
    };
    let below = (0..n).find(|&q| ranks[q] < ranks[p]);
    let above = (0..n).find(|&q| ranks[q] > ranks[p]);
    let mut reps = Vec::new();
    reps.extend(below);
    let mid = reps.len();
    reps.push(p);
    reps.extend(above);
    let rank_of = ranks
        .iter()
        .map(|&r| match r.cmp(&ranks[p]) {
            std::cmp::Ordering::Less => 0,
            std::cmp::Ordering::Equal => mid,
            std::cmp::Ordering::Greater => mid + 1,
        })
        .collect();
    CoarseInstance::from_ranks(rank_of, reps)
}

/// Removal set and witness for a known width, by replaying the ordered
/// solver on the three-class collapse around the answer. Uncharged.
pub fn interdiction_certificate<K: Ord>(
    net: &InterdictionNetwork,
    store: &ComparableStore<K>,
    width: AnswerOutcome,
) -> InterdictionSolution {
    let ranks = store.uncharged_ranks();
    let coarse = pivot_coarse(&ranks, width.position());
    let mut removed = Vec::new();
    let replay = greedy(net, &coarse, Some(&mut removed));
    debug_assert_eq!(replay, width);
    removed.sort_unstable();
    let witness_path = width.position().and_then(|p| {
        let mut live = vec![true; net.arcs.len()];
        for &x in &removed {
            live[x] = false;
        }
        residual_path(net, &live, |x| ranks[net.arcs[x].capacity] >= ranks[p])
    });
    InterdictionSolution {
        width,
        removed,
        witness_path,
    }
}

/// Breadth-first `s`-`t` path over live arcs accepted by `usable`.
fn residual_path(net: &InterdictionNetwork, live: &[bool], usable: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let out = net.out_arcs();
    let mut via = vec![None::<usize>; net.vertex_count];
    let mut seen = vec![false; net.vertex_count];
    seen[net.source] = true;
    let mut queue = VecDeque::from([net.source]);
    while let Some(u) = queue.pop_front() {
        if u == net.sink {
            let mut path = Vec::new();
            let mut at = u;
            while let Some(x) = via[at] {
                path.push(x);
                at = net.arcs[x].tail;
            }
            path.reverse();
            return Some(path);
        }
        for &x in &out[u] {
            let h = net.arcs[x].head;
            if live[x] && usable(x) && !seen[h] {
                seen[h] = true;
                via[h] = Some(x);
                queue.push_back(h);
            }
        }
    }
    None
}

/// Runs the chosen meta-solver, then recovers removals and a witness path.
pub fn solve_interdiction<K: Ord>(
    net: &InterdictionNetwork,
    store: &ComparableStore<K>,
    algorithm: Algorithm,
) -> Result<(SolveReport, InterdictionSolution), InterdictionError> {
    let problem = InterdictionProblem::new(net, store.len())?;
    let report = meta::solve(&problem, store, algorithm)?;
    let solution = interdiction_certificate(net, store, report.outcome);
    Ok((report, solution))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn arc(tail: usize, head: usize, capacity: usize) -> NetArc {
        NetArc { tail, head, capacity }
    }

    /// s=0, a=1, b=2, t=3; s->a 9, s->b 8, a->t 7, b->t 6.
    pub(crate) fn diamond() -> (InterdictionNetwork, ComparableStore<i32>) {
        let net = InterdictionNetwork::new(4, vec![arc(0, 1, 0), arc(0, 2, 1), arc(1, 3, 2), arc(2, 3, 3)], 0, 3);
        (net, ComparableStore::new(vec![9, 8, 7, 6]))
    }

    fn parallel(k: usize) -> (InterdictionNetwork, ComparableStore<i32>) {
        let net = InterdictionNetwork::new(2, vec![arc(0, 1, 0), arc(0, 1, 1)], 0, 1).with_budgets(vec![k, 0]);
        (net, ComparableStore::new(vec![4, 7]))
    }

    fn refined(net: &InterdictionNetwork, store: &ComparableStore<i32>) -> AnswerOutcome {
        ordered_solve_interdiction(net, &CoarseInstance::fully_refined(store)).unwrap()
    }

    #[test]
    fn validate_examples() {
        let net = InterdictionNetwork::new(2, vec![arc(0, 1, 0)], 0, 1);
        assert!(validate_network(&net, 1).is_ok());
        let same = InterdictionNetwork::new(2, vec![arc(0, 1, 0)], 1, 1);
        assert_eq!(
            validate_network(&same, 1),
            Err(vec![NetworkDiagnostic::SourceIsSink(1)])
        );
        let bad = InterdictionNetwork::new(2, vec![arc(0, 5, 3)], 0, 1);
        let diags = validate_network(&bad, 1).unwrap_err();
        assert_eq!(diags.len(), 2);
    }

    #[test]
    fn ordered_examples() {
        let path = InterdictionNetwork::new(3, vec![arc(0, 1, 0), arc(1, 2, 1)], 0, 2);
        assert_eq!(
            refined(&path, &ComparableStore::new(vec![4, 7])),
            AnswerOutcome::Answer(0)
        );
        let (net, s) = parallel(1);
        assert_eq!(refined(&net, &s), AnswerOutcome::Answer(0));
        let (net, s) = parallel(2);
        assert_eq!(refined(&net, &s), AnswerOutcome::BelowAll);
        let (net, s) = diamond();
        assert_eq!(refined(&net, &s), AnswerOutcome::Answer(2));
    }

    #[test]
    fn widest_path_examples() {
        let single = InterdictionNetwork::new(2, vec![arc(0, 1, 0)], 0, 1);
        assert_eq!(
            widest_path(&single, &ComparableStore::new(vec![5])),
            AnswerOutcome::Answer(0)
        );
        let path = InterdictionNetwork::new(3, vec![arc(0, 1, 0), arc(1, 2, 1)], 0, 2);
        assert_eq!(
            widest_path(&path, &ComparableStore::new(vec![4, 7])),
            AnswerOutcome::Answer(0)
        );
        let cut = InterdictionNetwork::new(3, vec![arc(0, 1, 0)], 0, 2);
        assert_eq!(
            widest_path(&cut, &ComparableStore::new(vec![4])),
            AnswerOutcome::BelowAll
        );
    }

    #[test]
    fn brute_force_examples() {
        let (net, s) = parallel(1);
        assert_eq!(
            brute_force_interdiction(&net, &s, DEFAULT_GUARD),
            Ok(AnswerOutcome::Answer(0))
        );
        let (net, s) = diamond();
        assert_eq!(
            brute_force_interdiction(&net, &s, DEFAULT_GUARD),
            Ok(AnswerOutcome::Answer(2))
        );
        let wide = InterdictionNetwork::new(2, (0..30).map(|i| arc(0, 1, i)).collect(), 0, 1).with_budgets(vec![30, 0]);
        let s = ComparableStore::new((0..30).collect::<Vec<i32>>());
        assert!(matches!(
            brute_force_interdiction(&wide, &s, DEFAULT_GUARD),
            Err(InterdictionError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn solve_and_verify() {
        for alg in Algorithm::ALL {
            let (net, s) = parallel(0);
            let (report, sol) = solve_interdiction(&net, &s, alg).unwrap();
            assert_eq!(report.outcome, AnswerOutcome::Answer(1));
            assert!(verify_interdiction(&net, &s, &sol));

            let (net, s) = parallel(2);
            let (report, sol) = solve_interdiction(&net, &s, alg).unwrap();
            assert_eq!(report.outcome, AnswerOutcome::BelowAll);
            assert_eq!(sol.removed, vec![0, 1]);
            assert!(verify_interdiction(&net, &s, &sol));
        }
    }

    #[test]
    fn verify_rejects_broken_solutions() {
        let (net, s) = parallel(1);
        let (_, good) = solve_interdiction(&net, &s, Algorithm::Sorted).unwrap();
        assert_eq!(good.removed, vec![1]);
        assert!(verify_interdiction(&net, &s, &good));
        let over_budget = InterdictionSolution {
            removed: vec![0, 1],
            ..good.clone()
        };
        assert!(!verify_interdiction(&net, &s, &over_budget));
        let (net2, s2) = parallel(2);
        let lying = InterdictionSolution {
            width: AnswerOutcome::Answer(0),
            removed: vec![0, 1],
            witness_path: Some(vec![0]),
        };
        assert!(!verify_interdiction(&net2, &s2, &lying));
        let no_witness = InterdictionSolution {
            witness_path: None,
            ..good
        };
        assert!(!verify_interdiction(&net, &s, &no_witness));
    }

    /// Downward-closed oracle: at most one removal, never the arc with id 0.
    #[derive(Debug)]
    struct ProtectFirst;

    impl BudgetOracle for ProtectFirst {
        fn allows(&self, _vertex: usize, removed: &[usize]) -> bool {
            removed.len() <= 1 && !removed.contains(&0)
        }
    }

    #[test]
    fn custom_budget_oracle() {
        // parallel arcs with the wider one protected: nothing useful to remove
        let mut net = InterdictionNetwork::new(2, vec![arc(0, 1, 0), arc(0, 1, 1)], 0, 1);
        net.budget_oracle = Some(Arc::new(ProtectFirst));
        let s = ComparableStore::new(vec![7, 4]);
        assert_eq!(refined(&net, &s), AnswerOutcome::Answer(0));
        assert_eq!(
            brute_force_interdiction(&net, &s, DEFAULT_GUARD),
            Ok(AnswerOutcome::Answer(0))
        );
        let s = ComparableStore::new(vec![4, 7]);
        assert_eq!(refined(&net, &s), AnswerOutcome::Answer(0));
    }
}
