//! Browser demo. Every export takes and returns strings: instance files in,
//! JSON out, so the page needs no glue beyond `JSON.parse`.

use minmax_core::bench::{self, BenchProblem};
use minmax_core::game::solve_game;
use minmax_core::generate::{key_literal, random_game, random_network, NetworkShape};
use minmax_core::instance_file::{parse_instance, write_game, write_network, Instance};
use minmax_core::interdiction::solve_interdiction;
use minmax_core::{Algorithm, AnswerOutcome, ComparableStore, Decimal};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct DrawnArc {
    tail: usize,
    head: usize,
    label: String,
}

#[derive(Serialize)]
struct NetworkView {
    vertices: usize,
    source: usize,
    sink: usize,
    budgets: Vec<usize>,
    arcs: Vec<DrawnArc>,
    width: String,
    removed: Vec<usize>,
    witness_path: Vec<usize>,
    comparisons: u64,
    iterations: usize,
}

#[derive(Serialize)]
struct GameView {
    max_nodes: Vec<bool>,
    start: usize,
    arcs: Vec<DrawnArc>,
    value: String,
    /// Chosen arc per node, whichever player owns it.
    strategy: Vec<usize>,
    comparisons: u64,
    iterations: usize,
}

#[derive(Serialize)]
struct CurvePoint {
    n: usize,
    algorithm: Algorithm,
    comparisons: u64,
    iterations: usize,
}

fn literal(outcome: AnswerOutcome, store: &ComparableStore<Decimal>) -> String {
    outcome
        .key(store)
        .map_or_else(|| "disconnected".to_string(), |d| d.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("views serialize")
}

pub fn network_json(text: &str, algorithm: &str) -> Result<String, String> {
    let alg: Algorithm = algorithm.parse()?;
    let Instance::Network { net, keys } = parse_instance(text).map_err(|e| e.to_string())? else {
        return Err("expected a network file".into());
    };
    let store = ComparableStore::new(keys);
    let (report, solution) = solve_interdiction(&net, &store, alg).map_err(|e| e.to_string())?;
    let arcs = net
        .arcs
        .iter()
        .map(|a| DrawnArc {
            tail: a.tail,
            head: a.head,
            label: store.key(a.capacity).to_string(),
        })
        .collect();
    Ok(to_json(&NetworkView {
        vertices: net.vertex_count,
        source: net.source,
        sink: net.sink,
        budgets: net.budgets.clone(),
        arcs,
        width: literal(report.outcome, &store),
        removed: solution.removed,
        witness_path: solution.witness_path.unwrap_or_default(),
        comparisons: report.comparisons,
        iterations: report.iterations,
    }))
}

pub fn game_json(text: &str, algorithm: &str) -> Result<String, String> {
    let alg: Algorithm = algorithm.parse()?;
    let Instance::Game { game, keys } = parse_instance(text).map_err(|e| e.to_string())? else {
        return Err("expected a game file".into());
    };
    let store = ComparableStore::new(keys);
    let (report, solution) = solve_game(&game, &store, alg).map_err(|e| e.to_string())?;
    let strategy = solution
        .max_strategy
        .iter()
        .zip(&solution.min_strategy)
        .map(|(a, b)| a.or(*b).expect("every node has a strategy"))
        .collect();
    let arcs = game
        .arcs
        .iter()
        .map(|a| DrawnArc {
            tail: a.tail,
            head: a.head,
            label: store.key(a.weight).to_string(),
        })
        .collect();
    Ok(to_json(&GameView {
        max_nodes: game
            .owners
            .iter()
            .map(|o| *o == minmax_core::game::Player::Max)
            .collect(),
        start: game.start,
        arcs,
        value: literal(report.outcome, &store),
        strategy,
        comparisons: report.comparisons,
        iterations: report.iterations,
    }))
}

/// Comparisons of every algorithm on one generated instance per size.
pub fn curve_json(problem: &str, sizes: &[usize], seed: u64) -> Result<String, String> {
    let problem: BenchProblem = problem.parse()?;
    if sizes.is_empty() || sizes.contains(&0) || sizes.iter().any(|&n| n > 1 << 16) {
        return Err("sizes must lie in 1..=65536".into());
    }
    let rows = bench::run(problem, sizes, &Algorithm::ALL, 1, seed).map_err(|e| e.to_string())?;
    let points: Vec<CurvePoint> = rows
        .into_iter()
        .map(|r| CurvePoint {
            n: r.n,
            algorithm: r.algorithm,
            comparisons: r.comparisons,
            iterations: r.iterations,
        })
        .collect();
    Ok(to_json(&points))
}

pub fn generate_text(problem: &str, vertices: usize, arcs: usize, seed: u64) -> Result<String, String> {
    let literals = |keys: &[u64]| keys.iter().map(|&k| key_literal(k)).collect::<Vec<_>>();
    match problem {
        "game" => {
            let (game, keys) = random_game(seed, vertices, arcs).map_err(|e| e.to_string())?;
            Ok(write_game(&game, &literals(&keys)))
        }
        "network" => {
            let shape = NetworkShape {
                vertices,
                arcs,
                budget_max: 1,
                ensure_path: true,
            };
            let (net, keys) = random_network(seed, shape).map_err(|e| e.to_string())?;
            Ok(write_network(&net, &literals(&keys)))
        }
        other => Err(format!("unknown problem {other:?}")),
    }
}

fn js(result: Result<String, String>) -> Result<String, JsValue> {
    result.map_err(|e| JsValue::from_str(&e))
}

/// Interdiction value, removed arcs and witness path as JSON.
#[wasm_bindgen(js_name = solveNetwork)]
pub fn solve_network(text: &str, algorithm: &str) -> Result<String, JsValue> {
    js(network_json(text, algorithm))
}

/// Game value and positional strategies as JSON.
#[wasm_bindgen(js_name = solveGame)]
pub fn solve_game_js(text: &str, algorithm: &str) -> Result<String, JsValue> {
    js(game_json(text, algorithm))
}

/// Comparison counts per algorithm, sizes given as a comma-separated list.
#[wasm_bindgen(js_name = comparisonCurve)]
pub fn comparison_curve(problem: &str, sizes: &str, seed: u32) -> Result<String, JsValue> {
    let parsed: Result<Vec<usize>, _> = sizes.split(',').map(|s| s.trim().parse::<usize>()).collect();
    let sizes = parsed.map_err(|e| JsValue::from_str(&e.to_string()))?;
    js(curve_json(problem, &sizes, seed.into()))
}

#[wasm_bindgen(js_name = generate)]
pub fn generate(problem: &str, vertices: u32, arcs: u32, seed: u32) -> Result<String, JsValue> {
    js(generate_text(problem, vertices as usize, arcs as usize, seed.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    const PARALLEL: &str = "network 2 2\nbudget 0 1\narc 0 1 4\narc 0 1 7\nsource 0\nsink 1\n";

    #[test]
    fn network_view() {
        let v: Value = serde_json::from_str(&network_json(PARALLEL, "logstar").unwrap()).unwrap();
        assert_eq!(v["width"], "4");
        assert_eq!(v["removed"], serde_json::json!([1]));
        assert_eq!(v["witness_path"], serde_json::json!([0]));
        assert_eq!(v["arcs"][1]["label"], "7");
        assert!(network_json(PARALLEL, "nope").is_err());
        assert!(game_json(PARALLEL, "logstar").is_err());
    }

    #[test]
    fn game_view() {
        let text =
            "game 3 4\nnode 0 max\nnode 1 min\nnode 2 min\narc 0 1 3\narc 0 2 7\narc 1 1 1\narc 2 2 2\nstart 0\n";
        let v: Value = serde_json::from_str(&game_json(text, "bisect").unwrap()).unwrap();
        assert_eq!(v["value"], "7");
        assert_eq!(v["strategy"], serde_json::json!([1, 2, 3]));
    }

    #[test]
    fn curve_and_generator() {
        let points: Vec<Value> = serde_json::from_str(&curve_json("game", &[16, 64], 1).unwrap()).unwrap();
        assert_eq!(points.len(), 2 * Algorithm::ALL.len());
        assert!(curve_json("game", &[0], 1).is_err());
        let text = generate_text("network", 6, 10, 2).unwrap();
        assert!(network_json(&text, "adaptive").is_ok());
        let text = generate_text("game", 4, 9, 2).unwrap();
        assert!(game_json(&text, "hybrid").is_ok());
    }
}
