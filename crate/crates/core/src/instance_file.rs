//! Line-oriented instance files.
//!
//! ```text
//! # a maximum payoff game
//! game 3 4
//! node 0 max
//! node 1 min
//! node 2 min
//! arc 0 1 3
//! arc 0 2 7
//! arc 1 1 1
//! arc 2 2 2
//! start 0
//! ```
//!
//! ```text
//! network 4 4
//! budget 0 1
//! arc 0 1 9
//! arc 0 2 8
//! arc 1 3 7
//! arc 2 3 6
//! source 0
//! sink 3
//! ```
//!
//! `#` starts a comment. Weights and capacities are decimal literals; arc `i`
//! owns comparable position `i`. Budgets default to zero.

use std::fmt::Write as _;

use thiserror::Error;

use crate::decimal::Decimal;
use crate::game::{validate_game, GameArc, MaxPayoffGame, Player};
use crate::interdiction::{validate_network, InterdictionNetwork, NetArc, NetworkDiagnostic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    /// Malformed text.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// Well-formed text describing an invalid instance.
    #[error("{}{message}", .line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Invalid { line: Option<usize>, message: String },
}

fn parse_err(line: usize, message: impl Into<String>) -> InstanceError {
    InstanceError::Parse {
        line,
        message: message.into(),
    }
}

fn invalid(line: impl Into<Option<usize>>, message: impl Into<String>) -> InstanceError {
    InstanceError::Invalid {
        line: line.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Game {
        game: MaxPayoffGame,
        keys: Vec<Decimal>,
    },
    Network {
        net: InterdictionNetwork,
        keys: Vec<Decimal>,
    },
}

struct Line<'a> {
    number: usize,
    words: Vec<&'a str>,
}

impl Line<'_> {
    fn expect_len(&self, n: usize) -> Result<(), InstanceError> {
        if self.words.len() == n {
            Ok(())
        } else {
            Err(parse_err(
                self.number,
                format!(
                    "{:?} takes {} fields, found {}",
                    self.words[0],
                    n - 1,
                    self.words.len() - 1
                ),
            ))
        }
    }

    fn index(&self, at: usize) -> Result<usize, InstanceError> {
        self.words[at].parse().map_err(|_| {
            parse_err(
                self.number,
                format!("expected a non-negative integer, found {:?}", self.words[at]),
            )
        })
    }

    fn decimal(&self, at: usize) -> Result<Decimal, InstanceError> {
        self.words[at]
            .parse()
            .map_err(|e| parse_err(self.number, format!("{e}")))
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let words: Vec<&str> = content.split_whitespace().collect();
            (!words.is_empty()).then_some(Line { number: i + 1, words })
        })
        .collect()
}

fn check_vertex(line: &Line, id: usize, count: usize, what: &str) -> Result<usize, InstanceError> {
    if id < count {
        Ok(id)
    } else {
        Err(invalid(line.number, format!("{what} {id} out of range (0..{count})")))
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, InstanceError> {
    let lines = lines(text);
    let Some(header) = lines.first() else {
        return Err(parse_err(1, "empty instance file"));
    };
    match header.words[0] {
        "game" => parse_game(&lines),
        "network" => parse_network(&lines),
        other => Err(parse_err(
            header.number,
            format!("expected \"game\" or \"network\", found {other:?}"),
        )),
    }
}

fn header_counts(header: &Line) -> Result<(usize, usize), InstanceError> {
    header.expect_len(3)?;
    Ok((header.index(1)?, header.index(2)?))
}

fn parse_game(lines: &[Line]) -> Result<Instance, InstanceError> {
    let (v, e) = header_counts(&lines[0])?;
    let mut owners: Vec<Option<Player>> = vec![None; v];
    let mut arcs = Vec::with_capacity(e);
    let mut keys = Vec::with_capacity(e);
    let mut start = None;
    for line in &lines[1..] {
        match line.words[0] {
            "node" => {
                line.expect_len(3)?;
                let id = check_vertex(line, line.index(1)?, v, "node")?;
                let owner = match line.words[2] {
                    "min" => Player::Min,
                    "max" => Player::Max,
                    other => {
                        return Err(parse_err(
                            line.number,
                            format!("owner must be min or max, found {other:?}"),
                        ))
                    }
                };
                if owners[id].replace(owner).is_some() {
                    return Err(invalid(line.number, format!("node {id} declared twice")));
                }
            }
            "arc" => {
                line.expect_len(4)?;
                let tail = check_vertex(line, line.index(1)?, v, "node")?;
                let head = check_vertex(line, line.index(2)?, v, "node")?;
                keys.push(line.decimal(3)?);
                arcs.push(GameArc {
                    tail,
                    head,
                    weight: arcs.len(),
                });
            }
            "start" => {
                line.expect_len(2)?;
                start = Some(check_vertex(line, line.index(1)?, v, "node")?);
            }
            other => return Err(parse_err(line.number, format!("unknown directive {other:?}"))),
        }
    }
    let last = lines.last().map_or(1, |l| l.number);
    if let Some(missing) = owners.iter().position(Option::is_none) {
        return Err(parse_err(last, format!("node {missing} is never declared")));
    }
    if arcs.len() != e {
        return Err(parse_err(
            last,
            format!("header promises {e} arcs, found {}", arcs.len()),
        ));
    }
    let start = start.ok_or_else(|| parse_err(last, "missing \"start\""))?;
    let game = MaxPayoffGame {
        owners: owners.into_iter().map(|o| o.expect("checked above")).collect(),
        arcs,
        start,
    };
    validate_game(&game, keys.len()).map_err(|diags| {
        invalid(
            None,
            diags.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        )
    })?;
    Ok(Instance::Game { game, keys })
}

fn parse_network(lines: &[Line]) -> Result<Instance, InstanceError> {
    let (v, e) = header_counts(&lines[0])?;
    let mut budgets = vec![0usize; v];
    let mut arcs = Vec::with_capacity(e);
    let mut keys = Vec::with_capacity(e);
    let (mut source, mut sink) = (None, None);
    for line in &lines[1..] {
        match line.words[0] {
            "budget" => {
                line.expect_len(3)?;
                let id = check_vertex(line, line.index(1)?, v, "vertex")?;
                let k: i64 = line.words[2].parse().map_err(|_| {
                    parse_err(
                        line.number,
                        format!("expected an integer budget, found {:?}", line.words[2]),
                    )
                })?;
                if k < 0 {
                    let diag = NetworkDiagnostic::NegativeBudget { vertex: id, budget: k };
                    return Err(invalid(line.number, diag.to_string()));
                }
                budgets[id] = k as usize;
            }
            "arc" => {
                line.expect_len(4)?;
                let tail = check_vertex(line, line.index(1)?, v, "vertex")?;
                let head = check_vertex(line, line.index(2)?, v, "vertex")?;
                keys.push(line.decimal(3)?);
                arcs.push(NetArc {
                    tail,
                    head,
                    capacity: arcs.len(),
                });
            }
            "source" => {
                line.expect_len(2)?;
                source = Some(check_vertex(line, line.index(1)?, v, "vertex")?);
            }
            "sink" => {
                line.expect_len(2)?;
                sink = Some(check_vertex(line, line.index(1)?, v, "vertex")?);
            }
            other => return Err(parse_err(line.number, format!("unknown directive {other:?}"))),
        }
    }
    let last = lines.last().map_or(1, |l| l.number);
    if arcs.len() != e {
        return Err(parse_err(
            last,
            format!("header promises {e} arcs, found {}", arcs.len()),
        ));
    }
    let source = source.ok_or_else(|| parse_err(last, "missing \"source\""))?;
    let sink = sink.ok_or_else(|| parse_err(last, "missing \"sink\""))?;
    let net = InterdictionNetwork::new(v, arcs, source, sink).with_budgets(budgets);
    validate_network(&net, keys.len()).map_err(|diags| {
        invalid(
            None,
            diags.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        )
    })?;
    Ok(Instance::Network { net, keys })
}

/// Writes a game whose arc `i` has weight `weights[i]`.
pub fn write_game(game: &MaxPayoffGame, weights: &[String]) -> String {
    let mut out = String::new();
    writeln!(out, "game {} {}", game.node_count(), game.arcs.len()).unwrap();
    for (i, owner) in game.owners.iter().enumerate() {
        let name = match owner {
            Player::Min => "min",
            Player::Max => "max",
        };
        writeln!(out, "node {i} {name}").unwrap();
    }
    for a in &game.arcs {
        writeln!(out, "arc {} {} {}", a.tail, a.head, weights[a.weight]).unwrap();
    }
    writeln!(out, "start {}", game.start).unwrap();
    out
}

/// Writes a network whose arc `i` has capacity `capacities[i]`. Zero budgets
/// are left implicit.
pub fn write_network(net: &InterdictionNetwork, capacities: &[String]) -> String {
    let mut out = String::new();
    writeln!(out, "network {} {}", net.vertex_count, net.arcs.len()).unwrap();
    for (v, &k) in net.budgets.iter().enumerate() {
        if k > 0 {
            writeln!(out, "budget {v} {k}").unwrap();
        }
    }
    for a in &net.arcs {
        writeln!(out, "arc {} {} {}", a.tail, a.head, capacities[a.capacity]).unwrap();
    }
    writeln!(out, "source {}", net.source).unwrap();
    writeln!(out, "sink {}", net.sink).unwrap();
    out
}

/// Writes either kind of instance with its own keys.
pub fn write_instance(instance: &Instance) -> String {
    match instance {
        Instance::Game { game, keys } => write_game(game, &literals(keys)),
        Instance::Network { net, keys } => write_network(net, &literals(keys)),
    }
}

fn literals(keys: &[Decimal]) -> Vec<String> {
    keys.iter().map(|k| k.literal().to_string()).collect()
}
