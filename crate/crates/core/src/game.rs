//! Maximum payoff games: two players move a token along the arcs of a
//! sink-free weighted digraph forever, and Min pays Max the largest weight
//! ever traversed.
//!
//! The ordered solver repeatedly looks at a maximum-weight arc `e = (v, h)`.
//! If `v` belongs to Min and has another way out, `e` is useless to Min and is
//! dropped. Otherwise the value of `v` is `w(e)`: every arc into `v` is raised
//! to `w(e)`, the other out-arcs of `v` are dropped and `e` is contracted into
//! `h`. The value of the start node is the weight at which its super-node is
//! first contracted.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::buckets::MonotoneBuckets;
use crate::meta::{self, Algorithm, AnswerOutcome, CoarseInstance, MetaError, OrderedProblem, SolveReport};
use crate::order::ComparableStore;
use crate::unionfind::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameArc {
    pub tail: usize,
    pub head: usize,
    /// Position of the arc's weight in the comparable store.
    pub weight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxPayoffGame {
    pub owners: Vec<Player>,
    pub arcs: Vec<GameArc>,
    pub start: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum GameDiagnostic {
    #[error("game has no nodes")]
    NoNodes,
    #[error("start node {0} out of range")]
    StartOutOfRange(usize),
    #[error("arc {arc}: tail {node} out of range")]
    TailOutOfRange { arc: usize, node: usize },
    #[error("arc {arc}: head {node} out of range")]
    HeadOutOfRange { arc: usize, node: usize },
    #[error("arc {arc}: weight position {position} out of range")]
    WeightOutOfRange { arc: usize, position: usize },
    #[error("node {0} is a sink")]
    Sink(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("invalid game: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<GameDiagnostic>),
    #[error(transparent)]
    Meta(#[from] MetaError),
    #[error("position {0} is not the value of the game")]
    InconsistentValue(usize),
}

impl MaxPayoffGame {
    pub fn node_count(&self) -> usize {
        self.owners.len()
    }

    fn out_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.node_count()];
        for (i, a) in self.arcs.iter().enumerate() {
            out[a.tail].push(i);
        }
        out
    }

    fn in_arcs(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.node_count()];
        for (i, a) in self.arcs.iter().enumerate() {
            inc[a.head].push(i);
        }
        inc
    }

    /// The same game with each listed node keeping only its chosen arc.
    fn restricted(&self, choice: &[Option<usize>]) -> MaxPayoffGame {
        let arcs = self
            .arcs
            .iter()
            .enumerate()
            .filter(|(i, a)| choice[a.tail].is_none_or(|c| c == *i))
            .map(|(_, a)| *a)
            .collect();
        MaxPayoffGame {
            owners: self.owners.clone(),
            arcs,
            start: self.start,
        }
    }
}

/// Lists everything wrong with `game` given a store of `comparables` keys.
pub fn validate_game(game: &MaxPayoffGame, comparables: usize) -> Result<(), Vec<GameDiagnostic>> {
    let mut diags = Vec::new();
    let v = game.node_count();
    if v == 0 {
        diags.push(GameDiagnostic::NoNodes);
    }
    if game.start >= v {
        diags.push(GameDiagnostic::StartOutOfRange(game.start));
    }
    let mut outdeg = vec![0usize; v];
    for (i, a) in game.arcs.iter().enumerate() {
        if a.tail >= v {
            diags.push(GameDiagnostic::TailOutOfRange { arc: i, node: a.tail });
        } else {
            outdeg[a.tail] += 1;
        }
        if a.head >= v {
            diags.push(GameDiagnostic::HeadOutOfRange { arc: i, node: a.head });
        }
        if a.weight >= comparables {
            diags.push(GameDiagnostic::WeightOutOfRange {
                arc: i,
                position: a.weight,
            });
        }
    }
    diags.extend(
        outdeg
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(node, _)| GameDiagnostic::Sink(node)),
    );
    if diags.is_empty() {
        Ok(())
    } else {
        Err(diags)
    }
}

/// Value of the game from its start node, given only the rank order of the
/// weights. Performs no comparisons of keys.
pub fn ordered_solve_game(game: &MaxPayoffGame, coarse: &CoarseInstance) -> Result<AnswerOutcome, GameError> {
    validate_game(game, coarse.comparable_count()).map_err(GameError::Invalid)?;
    Ok(contract(game, coarse))
}

fn contract(game: &MaxPayoffGame, coarse: &CoarseInstance) -> AnswerOutcome {
    let v_count = game.node_count();
    let mut uf = UnionFind::new(v_count);
    let mut owner = game.owners.clone();
    let mut out_list = game.out_arcs();
    let mut in_list = game.in_arcs();
    let mut outdeg: Vec<usize> = out_list.iter().map(Vec::len).collect();
    let mut alive = vec![true; game.arcs.len()];
    let mut rank: Vec<usize> = game.arcs.iter().map(|a| coarse.rank_of(a.weight)).collect();
    let mut buckets = MonotoneBuckets::new(coarse.rank_count());
    for (i, &r) in rank.iter().enumerate() {
        buckets.push(r, i);
    }
    let mut start_value = None;

    while let Some((b, e)) = buckets.pop_max() {
        if !alive[e] || rank[e] != b {
            continue;
        }
        let arc = game.arcs[e];
        let v = uf.find(arc.tail);
        let h = uf.find(arc.head);
        if owner[v] == Player::Min && outdeg[v] > 1 {
            alive[e] = false;
            outdeg[v] -= 1;
            continue;
        }
        if start_value.is_none() && uf.find(game.start) == v {
            start_value = Some(b);
        }
        // arcs into v now pay w(e); they all die while this bucket drains
        for x in std::mem::take(&mut in_list[v]) {
            if alive[x] && rank[x] < b {
                rank[x] = b;
                buckets.push(b, x);
            }
        }
        for x in std::mem::take(&mut out_list[v]) {
            alive[x] = false;
        }
        alive[e] = false;
        if v == h {
            outdeg[v] = 0;
            continue;
        }
        let root = uf.union(v, h);
        if root != h {
            owner[root] = owner[h];
            outdeg[root] = outdeg[h];
            out_list[root] = std::mem::take(&mut out_list[h]);
            in_list[root] = std::mem::take(&mut in_list[h]);
        }
    }

    let rank = start_value.expect("sink-free game assigns the start node a value");
    coarse.answer(rank)
}

/// Nodes from which Max can force the play through an arc of `target`.
pub fn attractor(game: &MaxPayoffGame, target: &[bool]) -> Vec<bool> {
    attractor_with_witness(game, target).0
}

/// Attractor plus, for Max nodes inside it, an arc that keeps play on course.
fn attractor_with_witness(game: &MaxPayoffGame, target: &[bool]) -> (Vec<bool>, Vec<Option<usize>>) {
    let n = game.node_count();
    let in_arcs = game.in_arcs();
    let mut remaining: Vec<usize> = game.out_arcs().iter().map(Vec::len).collect();
    let mut inside = vec![false; n];
    let mut witness = vec![None; n];
    let mut good = vec![false; game.arcs.len()];
    let mut queue = Vec::new();

    let mut mark = |arc: usize,
                    good: &mut Vec<bool>,
                    inside: &mut Vec<bool>,
                    witness: &mut Vec<Option<usize>>,
                    queue: &mut Vec<usize>| {
        if std::mem::replace(&mut good[arc], true) {
            return;
        }
        let u = game.arcs[arc].tail;
        if inside[u] {
            return;
        }
        let joins = match game.owners[u] {
            Player::Max => true,
            Player::Min => {
                remaining[u] -= 1;
                remaining[u] == 0
            }
        };
        if joins {
            inside[u] = true;
            witness[u] = Some(arc);
            queue.push(u);
        }
    };

    for (i, &t) in target.iter().enumerate() {
        if t {
            mark(i, &mut good, &mut inside, &mut witness, &mut queue);
        }
    }
    while let Some(node) = queue.pop() {
        for &x in &in_arcs[node] {
            mark(x, &mut good, &mut inside, &mut witness, &mut queue);
        }
    }
    (inside, witness)
}

/// Game value by threshold search: the largest weight `t` such that Max can
/// force an arc of weight at least `t`. Uses the uncharged order.
pub fn attractor_value_oracle<K: Ord>(game: &MaxPayoffGame, store: &ComparableStore<K>) -> AnswerOutcome {
    let ranks = store.uncharged_ranks();
    let mut thresholds: Vec<usize> = game.arcs.iter().map(|a| ranks[a.weight]).collect();
    thresholds.sort_unstable();
    thresholds.dedup();
    for &t in thresholds.iter().rev() {
        let target: Vec<bool> = game.arcs.iter().map(|a| ranks[a.weight] >= t).collect();
        if attractor(game, &target)[game.start] {
            let pos = game
                .arcs
                .iter()
                .find(|a| ranks[a.weight] == t)
                .map(|a| a.weight)
                .expect("threshold comes from an arc");
            return AnswerOutcome::Answer(pos);
        }
    }
    unreachable!("the lowest threshold targets every arc of a sink-free game")
}

/// Value of a game together with positional strategies attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameSolution {
    pub value: AnswerOutcome,
    /// Chosen out-arc per node, `Some` exactly at Max nodes.
    pub max_strategy: Vec<Option<usize>>,
    /// Chosen out-arc per node, `Some` exactly at Min nodes.
    pub min_strategy: Vec<Option<usize>>,
}

/// Positional strategies certifying that `value_pos` is the game value.
pub fn extract_strategies<K: Ord>(
    game: &MaxPayoffGame,
    store: &ComparableStore<K>,
    value_pos: usize,
) -> Result<GameSolution, GameError> {
    let ranks = store.uncharged_ranks();
    let value = ranks[value_pos];
    let at_least: Vec<bool> = game.arcs.iter().map(|a| ranks[a.weight] >= value).collect();
    let above: Vec<bool> = game.arcs.iter().map(|a| ranks[a.weight] > value).collect();
    let (win, witness) = attractor_with_witness(game, &at_least);
    let lose = attractor(game, &above);
    if !win[game.start] || lose[game.start] {
        return Err(GameError::InconsistentValue(value_pos));
    }
    let out = game.out_arcs();
    let mut max_strategy = vec![None; game.node_count()];
    let mut min_strategy = vec![None; game.node_count()];
    for (u, arcs) in out.iter().enumerate() {
        match game.owners[u] {
            Player::Max => {
                max_strategy[u] = Some(if win[u] {
                    witness[u].expect("Max node joined via an arc")
                } else {
                    arcs[0]
                });
            }
            Player::Min => {
                let safe = arcs.iter().copied().find(|&x| !above[x] && !lose[game.arcs[x].head]);
                min_strategy[u] = Some(if lose[u] {
                    arcs[0]
                } else {
                    safe.expect("Min node outside the attractor has a safe arc")
                });
            }
        }
    }
    Ok(GameSolution {
        value: AnswerOutcome::Answer(value_pos),
        max_strategy,
        min_strategy,
    })
}

/// True iff each strategy alone secures the claimed value.
pub fn verify_strategies<K: Ord>(game: &MaxPayoffGame, store: &ComparableStore<K>, solution: &GameSolution) -> bool {
    let AnswerOutcome::Answer(claimed) = solution.value else {
        return false;
    };
    let n = game.node_count();
    if solution.max_strategy.len() != n || solution.min_strategy.len() != n {
        return false;
    }
    for u in 0..n {
        let (mine, other) = match game.owners[u] {
            Player::Max => (solution.max_strategy[u], solution.min_strategy[u]),
            Player::Min => (solution.min_strategy[u], solution.max_strategy[u]),
        };
        let Some(arc) = mine else { return false };
        if other.is_some() || game.arcs.get(arc).is_none_or(|a| a.tail != u) {
            return false;
        }
    }
    let same_value = |g: MaxPayoffGame| attractor_value_oracle(&g, store) == AnswerOutcome::Answer(claimed);
    same_value(game.restricted(&solution.max_strategy)) && same_value(game.restricted(&solution.min_strategy))
}

/// A validated game as a meta-solver plug-in. Work bound `|E|`.
#[derive(Debug, Clone, Copy)]
pub struct GameProblem<'a> {
    game: &'a MaxPayoffGame,
    comparables: usize,
}

impl<'a> GameProblem<'a> {
    pub fn new(game: &'a MaxPayoffGame, comparables: usize) -> Result<Self, GameError> {
        validate_game(game, comparables).map_err(GameError::Invalid)?;
        Ok(GameProblem { game, comparables })
    }
}

impl OrderedProblem for GameProblem<'_> {
    fn comparable_count(&self) -> usize {
        self.comparables
    }

    fn work_bound(&self) -> u64 {
        (self.game.arcs.len().max(self.comparables)) as u64
    }

    fn solve_ordered(&self, coarse: &CoarseInstance) -> AnswerOutcome {
        contract(self.game, coarse)
    }
}

/// Runs the chosen meta-solver on the game and attaches strategies. The
/// strategy post-pass uses the uncharged order, so `report.comparisons`
/// covers the solve only.
pub fn solve_game<K: Ord>(
    game: &MaxPayoffGame,
    store: &ComparableStore<K>,
    algorithm: Algorithm,
) -> Result<(SolveReport, GameSolution), GameError> {
    let problem = GameProblem::new(game, store.len())?;
    let report = meta::solve(&problem, store, algorithm)?;
    let pos = report.outcome.position().expect("games always have a value");
    let solution = extract_strategies(game, store, pos)?;
    Ok((report, solution))
}
