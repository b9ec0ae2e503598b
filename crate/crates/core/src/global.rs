//! Widest-path interdiction under a single global budget of `k` arc removals.
//!
//! The answer is the smallest capacity `q` such that deleting every arc of
//! capacity at most `q` leaves at most `k` arc-disjoint `s`-`t` paths: the
//! interdictor then cuts all wider paths with `k` removals. Connectivity is
//! measured with unit-capacity blocking flows, stopped once it exceeds `k`.

use crate::flow::UnitFlow;
use crate::interdiction::{validate_network, widest_rank, InterdictionError, InterdictionNetwork};
use crate::meta::{AnswerOutcome, CoarseInstance, OrderedProblem};
use crate::order::ComparableStore;

/// Whether at most `k` arc-disjoint `s`-`t` paths use only arcs in `subset`.
pub fn arc_connectivity_at_most(net: &InterdictionNetwork, subset: &[bool], k: usize) -> bool {
    let mut flow = UnitFlow::new(net.vertex_count);
    for (a, &keep) in net.arcs.iter().zip(subset) {
        if keep {
            flow.add_arc(a.tail, a.head);
        }
    }
    flow.max_flow(net.source, net.sink, k + 1) <= k
}

fn threshold_search(net: &InterdictionNetwork, arc_rank: &[usize], rank_count: usize, k: usize) -> Option<usize> {
    // f(q): arcs of rank >= q have connectivity <= k; f(rank_count) holds trivially
    let holds = |q: usize| {
        let subset: Vec<bool> = arc_rank.iter().map(|&r| r >= q).collect();
        arc_connectivity_at_most(net, &subset, k)
    };
    if holds(0) {
        return None;
    }
    let (mut lo, mut hi) = (0, rank_count);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // smallest passing threshold is hi; the arcs of rank hi - 1 are the last removed
    Some(hi - 1)
}

/// A global-budget instance as a meta-solver plug-in.
#[derive(Debug, Clone, Copy)]
pub struct GlobalInterdictionProblem<'a> {
    net: &'a InterdictionNetwork,
    k: usize,
    comparables: usize,
}

impl<'a> GlobalInterdictionProblem<'a> {
    pub fn new(net: &'a InterdictionNetwork, k: usize, comparables: usize) -> Result<Self, InterdictionError> {
        validate_network(net, comparables).map_err(InterdictionError::Invalid)?;
        Ok(GlobalInterdictionProblem { net, k, comparables })
    }
}

impl OrderedProblem for GlobalInterdictionProblem<'_> {
    fn comparable_count(&self) -> usize {
        self.comparables
    }

    /// `|E| min(|E|^1/2, |V|^2/3) log |E|`.
    fn work_bound(&self) -> u64 {
        let e = self.net.arcs.len().max(2) as f64;
        let v = self.net.vertex_count as f64;
        let bound = e * e.sqrt().min(v.powf(2.0 / 3.0)) * e.log2();
        (bound.ceil() as u64).max(self.comparables as u64)
    }

    fn solve_ordered(&self, coarse: &CoarseInstance) -> AnswerOutcome {
        let arc_rank: Vec<usize> = self.net.arcs.iter().map(|a| coarse.rank_of(a.capacity)).collect();
        match threshold_search(self.net, &arc_rank, coarse.rank_count(), self.k) {
            Some(r) => coarse.answer(r),
            None => AnswerOutcome::BelowAll,
        }
    }
}

/// Global-budget interdiction value by binary search over the capacity order
/// (uncharged).
pub fn global_solve<K: Ord>(
    net: &InterdictionNetwork,
    store: &ComparableStore<K>,
    k: usize,
) -> Result<AnswerOutcome, InterdictionError> {
    let problem = GlobalInterdictionProblem::new(net, k, store.len())?;
    Ok(problem.solve_ordered(&CoarseInstance::fully_refined(store)))
}

/// Ground truth: minimum residual width over all removal sets of size at most `k`.
pub fn brute_force_global<K: Ord>(
    net: &InterdictionNetwork,
    store: &ComparableStore<K>,
    k: usize,
    guard: u64,
) -> Result<AnswerOutcome, InterdictionError> {
    validate_network(net, store.len()).map_err(InterdictionError::Invalid)?;
    let e = net.arcs.len();
    let mut needed: u64 = 0;
    let mut binom: u64 = 1;
    for j in 0..=k.min(e) {
        if j > 0 {
            binom = binom.saturating_mul((e - j + 1) as u64) / j as u64;
        }
        needed = needed.saturating_add(binom);
    }
    if needed > guard {
        return Err(InterdictionError::GuardExceeded { needed, guard });
    }
    let ranks = store.uncharged_ranks();
    let mut live = vec![true; e];
    let mut best = widest_rank(net, &ranks, &live);
    let mut chosen = Vec::with_capacity(k);
    search_subsets(net, &ranks, &mut live, &mut chosen, 0, k, &mut best);
    Ok(match best {
        Some(r) => AnswerOutcome::Answer(
            net.arcs
                .iter()
                .map(|a| a.capacity)
                .find(|&p| ranks[p] == r)
                .expect("rank belongs to an arc"),
        ),
        None => AnswerOutcome::BelowAll,
    })
}

fn search_subsets(
    net: &InterdictionNetwork,
    ranks: &[usize],
    live: &mut [bool],
    chosen: &mut Vec<usize>,
    from: usize,
    k: usize,
    best: &mut Option<usize>,
) {
    if chosen.len() == k || best.is_none() {
        return;
    }
    for x in from..net.arcs.len() {
        live[x] = false;
        chosen.push(x);
        let w = widest_rank(net, ranks, live);
        if w < *best {
            *best = w;
        }
        search_subsets(net, ranks, live, chosen, x + 1, k, best);
        chosen.pop();
        live[x] = true;
    }
}
