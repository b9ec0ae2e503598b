use std::fmt::Write as _;
use std::time::Duration;

use minmax_core::game::GameSolution;
use minmax_core::interdiction::InterdictionSolution;
use minmax_core::meta::SolveReport;
use minmax_core::{AnswerOutcome, ComparableStore, Decimal};
use serde::Serialize;

/// What `solve` and `oracle` print.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub problem: &'static str,
    pub algorithm: String,
    /// The answer's literal, or "disconnected".
    pub outcome: String,
    pub answer_position: Option<usize>,
    pub comparisons: u64,
    pub iterations: usize,
    pub group_counts: Vec<usize>,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removed_arcs: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_path: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_strategy: Option<Vec<Option<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_strategy: Option<Vec<Option<usize>>>,
}

fn literal(outcome: AnswerOutcome, store: &ComparableStore<Decimal>) -> String {
    match outcome.key(store) {
        Some(d) => d.to_string(),
        None => "disconnected".into(),
    }
}

impl RunReport {
    pub fn from_solve(
        problem: &'static str,
        algorithm: minmax_core::Algorithm,
        store: &ComparableStore<Decimal>,
        report: &SolveReport,
    ) -> Self {
        RunReport {
            problem,
            algorithm: algorithm.to_string(),
            outcome: literal(report.outcome, store),
            answer_position: report.outcome.position(),
            comparisons: report.comparisons,
            iterations: report.iterations,
            group_counts: report.group_counts.clone(),
            elapsed_ms: report.elapsed.as_secs_f64() * 1e3,
            removed_arcs: None,
            witness_path: None,
            max_strategy: None,
            min_strategy: None,
        }
    }

    /// Oracles read the order without charging, so counts stay at zero.
    pub fn from_oracle(
        problem: &'static str,
        store: &ComparableStore<Decimal>,
        outcome: AnswerOutcome,
        elapsed: Duration,
    ) -> Self {
        RunReport {
            problem,
            algorithm: "oracle".into(),
            outcome: literal(outcome, store),
            answer_position: outcome.position(),
            comparisons: store.comparisons(),
            iterations: 0,
            group_counts: Vec::new(),
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
            removed_arcs: None,
            witness_path: None,
            max_strategy: None,
            min_strategy: None,
        }
    }

    pub fn with_strategies(mut self, sol: GameSolution) -> Self {
        self.max_strategy = Some(sol.max_strategy);
        self.min_strategy = Some(sol.min_strategy);
        self
    }

    pub fn with_interdiction(mut self, sol: InterdictionSolution) -> Self {
        self.removed_arcs = Some(sol.removed);
        self.witness_path = sol.witness_path;
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string(self).expect("report serializes");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        let list = |xs: &[usize]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let strategy = |xs: &[Option<usize>]| {
            xs.iter()
                .enumerate()
                .filter_map(|(node, arc)| arc.map(|a| format!("{node}:{a}")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(out, "problem: {}", self.problem).unwrap();
        writeln!(out, "algorithm: {}", self.algorithm).unwrap();
        writeln!(out, "value: {}", self.outcome).unwrap();
        if let Some(p) = self.answer_position {
            writeln!(out, "position: {p}").unwrap();
        }
        writeln!(out, "comparisons: {}", self.comparisons).unwrap();
        writeln!(out, "iterations: {}", self.iterations).unwrap();
        writeln!(out, "group_counts: {}", list(&self.group_counts)).unwrap();
        writeln!(out, "elapsed_ms: {:.3}", self.elapsed_ms).unwrap();
        if let Some(r) = &self.removed_arcs {
            writeln!(out, "removed_arcs: {}", list(r)).unwrap();
        }
        if let Some(w) = &self.witness_path {
            writeln!(out, "witness_path: {}", list(w)).unwrap();
        }
        if let Some(s) = &self.max_strategy {
            writeln!(out, "max_strategy: {}", strategy(s)).unwrap();
        }
        if let Some(s) = &self.min_strategy {
            writeln!(out, "min_strategy: {}", strategy(s)).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disconnected_surface_form() {
        let store = ComparableStore::new(vec!["1.5".parse::<Decimal>().unwrap()]);
        let r = RunReport::from_oracle("interdict", &store, AnswerOutcome::BelowAll, Duration::ZERO);
        let text = r.render(false);
        assert!(text.contains("value: disconnected\n"));
        assert!(!text.contains("position:"));
        let v: serde_json::Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(v["outcome"], "disconnected");
        assert!(v["answer_position"].is_null());
        assert!(v.get("removed_arcs").is_none());
    }

    #[test]
    fn literal_is_kept_verbatim() {
        let store = ComparableStore::new(vec!["07.50".parse::<Decimal>().unwrap()]);
        let r = RunReport::from_oracle("game", &store, AnswerOutcome::Answer(0), Duration::ZERO);
        assert!(r.render(false).contains("value: 07.50\n"));
    }
}
