//! Min-max circuits: acyclic networks of k-ary MIN and MAX gates.
//!
//! A function is computed by such a circuit exactly when its output is always
//! one of its inputs and it commutes with every monotone map. This module
//! evaluates circuits, checks the commutation property on concrete inputs,
//! and writes out explicit circuits for small interdiction and game
//! instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::game::{MaxPayoffGame, Player};
use crate::interdiction::{InterdictionError, InterdictionNetwork, DEFAULT_GUARD};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GateKind {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Wire {
    Input(usize),
    Gate(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gate {
    pub kind: GateKind,
    pub operands: Vec<Wire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinMaxCircuit {
    pub input_count: usize,
    pub gates: Vec<Gate>,
    pub output: Wire,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("circuit takes {expected} inputs, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("gate {gate} references {wire:?}, which is not an input or an earlier gate")]
    BadReference { gate: usize, wire: Wire },
    #[error("gate {0} has no operands")]
    EmptyGate(usize),
    #[error("circuit would need {needed} cases, guard is {guard}")]
    GuardExceeded { needed: u64, guard: u64 },
}

impl From<InterdictionError> for CircuitError {
    fn from(e: InterdictionError) -> Self {
        match e {
            InterdictionError::GuardExceeded { needed, guard } => CircuitError::GuardExceeded { needed, guard },
            other => unreachable!("removal enumeration only fails on the guard: {other}"),
        }
    }
}

impl MinMaxCircuit {
    pub fn validate(&self) -> Result<(), CircuitError> {
        let ok = |wire: Wire, limit: usize| match wire {
            Wire::Input(i) => i < self.input_count,
            Wire::Gate(g) => g < limit,
        };
        for (g, gate) in self.gates.iter().enumerate() {
            if gate.operands.is_empty() {
                return Err(CircuitError::EmptyGate(g));
            }
            if let Some(&wire) = gate.operands.iter().find(|&&w| !ok(w, g)) {
                return Err(CircuitError::BadReference { gate: g, wire });
            }
        }
        if !ok(self.output, self.gates.len()) {
            return Err(CircuitError::BadReference {
                gate: self.gates.len(),
                wire: self.output,
            });
        }
        Ok(())
    }

    fn push(&mut self, kind: GateKind, operands: Vec<Wire>) -> Wire {
        self.gates.push(Gate { kind, operands });
        Wire::Gate(self.gates.len() - 1)
    }
}

/// Value of the circuit's output; always one of `values`.
pub fn evaluate<K: Ord + Clone>(circuit: &MinMaxCircuit, values: &[K]) -> Result<K, CircuitError> {
    if values.len() != circuit.input_count {
        return Err(CircuitError::Arity {
            expected: circuit.input_count,
            got: values.len(),
        });
    }
    circuit.validate()?;
    // gate results as input indices
    let mut result: Vec<usize> = Vec::with_capacity(circuit.gates.len());
    let index = |w: Wire, result: &[usize]| match w {
        Wire::Input(i) => i,
        Wire::Gate(g) => result[g],
    };
    for gate in &circuit.gates {
        let mut operands = gate.operands.iter().map(|&w| index(w, &result));
        let first = operands.next().expect("validated non-empty");
        let best = operands.fold(first, |acc, i| match gate.kind {
            GateKind::Min if values[i] < values[acc] => i,
            GateKind::Max if values[i] > values[acc] => i,
            _ => acc,
        });
        result.push(best);
    }
    Ok(values[index(circuit.output, &result)].clone())
}

/// A non-decreasing map on the distinct ranks of some input multiset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotoneMap {
    pub table: Vec<u64>,
}

impl MonotoneMap {
    pub fn identity(rank_count: usize) -> Self {
        MonotoneMap {
            table: (0..rank_count as u64).collect(),
        }
    }

    pub fn is_monotone(&self) -> bool {
        self.table.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Deterministic random non-decreasing table; often collapses ranks.
pub fn random_monotone_map(seed: u64, rank_count: usize) -> MonotoneMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = rank_count.max(1) as u64;
    let mut table: Vec<u64> = (0..rank_count).map(|_| rng.gen_range(0..span)).collect();
    table.sort_unstable();
    MonotoneMap { table }
}

/// Whether `evaluate(map ∘ values) == map(evaluate(values))`.
pub fn check_commutation<K: Ord + Clone>(
    circuit: &MinMaxCircuit,
    values: &[K],
    map: &MonotoneMap,
) -> Result<bool, CircuitError> {
    let mut distinct: Vec<&K> = values.iter().collect();
    distinct.sort();
    distinct.dedup();
    let rank = |v: &K| distinct.binary_search(&v).expect("value is among the inputs");
    if map.table.len() < distinct.len() {
        return Ok(false);
    }
    let mapped: Vec<u64> = values.iter().map(|v| map.table[rank(v)]).collect();
    let lhs = evaluate(circuit, &mapped)?;
    let rhs = map.table[rank(&evaluate(circuit, values)?)];
    Ok(lhs == rhs)
}

/// Random circuit with `gates` gates over `inputs` inputs, each gate taking
/// one to three operands among the inputs and earlier gates.
pub fn random_circuit(seed: u64, inputs: usize, gates: usize) -> MinMaxCircuit {
    assert!(inputs > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut circuit = MinMaxCircuit {
        input_count: inputs,
        gates: Vec::with_capacity(gates),
        output: Wire::Input(0),
    };
    for g in 0..gates {
        let kind = if rng.gen_bool(0.5) {
            GateKind::Min
        } else {
            GateKind::Max
        };
        let arity = rng.gen_range(1..=3);
        let operands = (0..arity)
            .map(|_| {
                let pick = rng.gen_range(0..inputs + g);
                if pick < inputs {
                    Wire::Input(pick)
                } else {
                    Wire::Gate(pick - inputs)
                }
            })
            .collect();
        circuit.output = circuit.push(kind, operands);
    }
    circuit
}

/// Explicit circuit for a vertex-budget interdiction instance: MIN over
/// feasible removal sets of MAX over surviving simple `s`-`t` paths of MIN
/// over the path's capacities. Inputs are the `comparables` capacities plus
/// one trailing sentinel input standing for "disconnected".
pub fn interdiction_to_circuit(
    net: &InterdictionNetwork,
    comparables: usize,
    guard: u64,
) -> Result<MinMaxCircuit, CircuitError> {
    let paths = simple_paths(net, guard)?;
    let sentinel = Wire::Input(comparables);
    let mut circuit = MinMaxCircuit {
        input_count: comparables + 1,
        gates: Vec::new(),
        output: sentinel,
    };
    let path_wires: Vec<Wire> = paths
        .iter()
        .map(|p| {
            circuit.push(
                GateKind::Min,
                p.iter().map(|&x| Wire::Input(net.arcs[x].capacity)).collect(),
            )
        })
        .collect();
    let mut cases = 0u64;
    let mut outcomes = Vec::new();
    let mut exceeded = None;
    crate::interdiction::for_each_removal(net, guard, |live| {
        cases += paths.len().max(1) as u64;
        if cases > guard {
            exceeded = Some(cases);
            return false;
        }
        let surviving: Vec<Wire> = paths
            .iter()
            .zip(&path_wires)
            .filter(|(p, _)| p.iter().all(|&x| live[x]))
            .map(|(_, &w)| w)
            .collect();
        outcomes.push(surviving);
        true
    })?;
    if let Some(needed) = exceeded {
        return Err(CircuitError::GuardExceeded { needed, guard });
    }
    let per_removal: Vec<Wire> = outcomes
        .into_iter()
        .map(|surviving| {
            if surviving.is_empty() {
                sentinel
            } else {
                circuit.push(GateKind::Max, surviving)
            }
        })
        .collect();
    circuit.output = circuit.push(GateKind::Min, per_removal);
    Ok(circuit)
}

fn simple_paths(net: &InterdictionNetwork, guard: u64) -> Result<Vec<Vec<usize>>, CircuitError> {
    let out = net.out_arcs();
    let mut paths = Vec::new();
    let mut on_path = vec![false; net.vertex_count];
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(
        net: &InterdictionNetwork,
        out: &[Vec<usize>],
        u: usize,
        on_path: &mut [bool],
        stack: &mut Vec<usize>,
        paths: &mut Vec<Vec<usize>>,
        guard: u64,
    ) -> Result<(), CircuitError> {
        if u == net.sink {
            paths.push(stack.clone());
            if paths.len() as u64 > guard {
                return Err(CircuitError::GuardExceeded {
                    needed: paths.len() as u64,
                    guard,
                });
            }
            return Ok(());
        }
        on_path[u] = true;
        for &x in &out[u] {
            let h = net.arcs[x].head;
            if !on_path[h] {
                stack.push(x);
                dfs(net, out, h, on_path, stack, paths, guard)?;
                stack.pop();
            }
        }
        on_path[u] = false;
        Ok(())
    }
    dfs(net, &out, net.source, &mut on_path, &mut stack, &mut paths, guard)?;
    Ok(paths)
}

/// Explicit circuit for a maximum payoff game: MAX over positional Max
/// strategies of MIN over positional Min strategies of the largest weight on
/// the resulting play. Inputs are the `comparables` weights.
pub fn game_to_circuit(game: &MaxPayoffGame, comparables: usize, guard: u64) -> Result<MinMaxCircuit, CircuitError> {
    let n = game.node_count();
    let mut out = vec![Vec::new(); n];
    for (i, a) in game.arcs.iter().enumerate() {
        out[a.tail].push(i);
    }
    let max_nodes: Vec<usize> = (0..n).filter(|&u| game.owners[u] == Player::Max).collect();
    let min_nodes: Vec<usize> = (0..n).filter(|&u| game.owners[u] == Player::Min).collect();
    let count = |nodes: &[usize]| {
        nodes
            .iter()
            .fold(1u64, |acc, &u| acc.saturating_mul(out[u].len() as u64))
    };
    let needed = count(&max_nodes).saturating_mul(count(&min_nodes));
    if needed > guard {
        return Err(CircuitError::GuardExceeded { needed, guard });
    }
    let mut circuit = MinMaxCircuit {
        input_count: comparables,
        gates: Vec::new(),
        output: Wire::Input(0),
    };
    let mut choice = vec![0usize; n];
    let mut per_max = Vec::new();
    for_each_assignment(&max_nodes, &out, &mut choice, &mut |choice| {
        let mut per_min = Vec::new();
        let mut inner = choice.to_vec();
        for_each_assignment(&min_nodes, &out, &mut inner, &mut |choice| {
            let play = lasso_arcs(game, &out, choice);
            let wires = play.iter().map(|&x| Wire::Input(game.arcs[x].weight)).collect();
            per_min.push(circuit.push(GateKind::Max, wires));
        });
        per_max.push(circuit.push(GateKind::Min, per_min));
    });
    circuit.output = circuit.push(GateKind::Max, per_max);
    Ok(circuit)
}

fn for_each_assignment(nodes: &[usize], out: &[Vec<usize>], choice: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    match nodes.split_first() {
        None => visit(choice),
        Some((&u, rest)) => {
            for &x in &out[u] {
                choice[u] = x;
                for_each_assignment(rest, out, choice, visit);
            }
        }
    }
}

/// Arcs traversed by the play from the start under a full positional profile.
fn lasso_arcs(game: &MaxPayoffGame, out: &[Vec<usize>], choice: &[usize]) -> Vec<usize> {
    debug_assert!(out.iter().all(|o| !o.is_empty()));
    let mut seen = vec![false; game.node_count()];
    let mut arcs = Vec::new();
    let mut u = game.start;
    while !seen[u] {
        seen[u] = true;
        arcs.push(choice[u]);
        u = game.arcs[choice[u]].head;
    }
    arcs
}

/// Default enumeration guard for circuit construction.
pub const CIRCUIT_GUARD: u64 = DEFAULT_GUARD;
