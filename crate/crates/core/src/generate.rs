//! Seeded random instances. Keys are distinct by construction: a random
//! permutation of `0..m` scaled by 1000 plus a random fractional part, so
//! they print as decimal literals with three fractional digits.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::game::{GameArc, MaxPayoffGame, Player};
use crate::interdiction::{InterdictionNetwork, NetArc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("a sink-free game needs at least one arc per node ({nodes} nodes, {arcs} arcs)")]
    TooFewArcs { nodes: usize, arcs: usize },
    #[error("a network needs at least two vertices")]
    TooFewVertices,
    #[error("a game needs at least one node")]
    NoNodes,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` distinct keys in random order.
pub fn distinct_keys(rng: &mut impl Rng, count: usize) -> Vec<u64> {
    let mut keys: Vec<u64> = (0..count as u64).collect();
    keys.shuffle(rng);
    keys.iter_mut().for_each(|k| *k = *k * 1000 + rng.gen_range(0..1000));
    keys
}

/// Decimal surface form of a generated key.
pub fn key_literal(key: u64) -> String {
    format!("{}.{:03}", key / 1000, key % 1000)
}

/// Random game with `nodes` nodes and `arcs >= nodes` arcs; arc `i` uses
/// weight position `i`. Every node gets one out-arc first, so the game is
/// sink-free.
pub fn random_game(seed: u64, nodes: usize, arcs: usize) -> Result<(MaxPayoffGame, Vec<u64>), GenerateError> {
    if nodes == 0 {
        return Err(GenerateError::NoNodes);
    }
    if arcs < nodes {
        return Err(GenerateError::TooFewArcs { nodes, arcs });
    }
    let mut rng = rng(seed);
    let owners = (0..nodes)
        .map(|_| if rng.gen_bool(0.5) { Player::Max } else { Player::Min })
        .collect();
    let mut list = Vec::with_capacity(arcs);
    for i in 0..arcs {
        let tail = if i < nodes { i } else { rng.gen_range(0..nodes) };
        let head = rng.gen_range(0..nodes);
        list.push(GameArc { tail, head, weight: i });
    }
    let start = rng.gen_range(0..nodes);
    let keys = distinct_keys(&mut rng, arcs);
    Ok((
        MaxPayoffGame {
            owners,
            arcs: list,
            start,
        },
        keys,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NetworkShape {
    pub vertices: usize,
    pub arcs: usize,
    pub budget_max: usize,
    /// Start with a random `s`-`t` path.
    pub ensure_path: bool,
}

/// Random network with source `0` and sink `vertices - 1`; arc `i` uses
/// capacity position `i`. No self-loops.
pub fn random_network(seed: u64, shape: NetworkShape) -> Result<(InterdictionNetwork, Vec<u64>), GenerateError> {
    let NetworkShape {
        vertices,
        arcs,
        budget_max,
        ensure_path,
    } = shape;
    if vertices < 2 {
        return Err(GenerateError::TooFewVertices);
    }
    let mut rng = rng(seed);
    let (s, t) = (0, vertices - 1);
    let mut list = Vec::with_capacity(arcs);
    if ensure_path && arcs > 0 {
        let max_inner = (vertices - 2).min(arcs - 1).min(4);
        let inner = rng.gen_range(0..=max_inner);
        let mut middle: Vec<usize> = (1..vertices - 1).collect();
        middle.shuffle(&mut rng);
        let mut at = s;
        for &v in middle.iter().take(inner).chain(std::iter::once(&t)) {
            list.push(NetArc {
                tail: at,
                head: v,
                capacity: list.len(),
            });
            at = v;
        }
    }
    while list.len() < arcs {
        let tail = rng.gen_range(0..vertices);
        let mut head = rng.gen_range(0..vertices - 1);
        if head >= tail {
            head += 1;
        }
        list.push(NetArc {
            tail,
            head,
            capacity: list.len(),
        });
    }
    let budgets = (0..vertices).map(|_| rng.gen_range(0..=budget_max)).collect();
    let keys = distinct_keys(&mut rng, arcs);
    let net = InterdictionNetwork::new(vertices, list, s, t).with_budgets(budgets);
    Ok((net, keys))
}
