use std::fmt::Write as _;

use clap::Args;
use minmax_core::circuit::{check_commutation, evaluate, random_circuit, random_monotone_map};
use minmax_core::generate::rng;
use minmax_core::recurrence::{check_adaptive_recurrence, check_recurrence_lemmas};
use rand::Rng;

use crate::Failure;

#[derive(Args)]
pub struct CheckArgs {
    /// Random circuits in the commutation suite.
    #[arg(long, default_value_t = 1000)]
    circuits: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Negative control: inflate the growth-lemma bound so that check fails.
    #[arg(long)]
    corrupt_bound: bool,
}

pub fn run(args: &CheckArgs) -> Result<String, Failure> {
    let mut out = String::new();
    let mut failed = 0;
    let mut line = |ok: bool, what: String| {
        failed += usize::from(!ok);
        writeln!(out, "{} {what}", if ok { "PASS" } else { "FAIL" }).unwrap();
    };

    let scale = if args.corrupt_bound { 1e6 } else { 1.0 };
    let lemmas = check_recurrence_lemmas(12, scale);
    let growth = lemmas.growth_lemma.iter().filter(|c| c.holds).count();
    let tower = lemmas.tower_lemma.iter().filter(|c| c.holds).count();
    line(
        lemmas.growth_lemma.iter().all(|c| c.holds),
        format!(
            "growth lemma x_i >= i^2 log2(i+1): {growth}/{} indices",
            lemmas.growth_lemma.len()
        ),
    );
    line(
        lemmas.tower_lemma.iter().all(|c| c.holds),
        format!(
            "tower lemma log2 x_(i+2) >= x_i: {tower}/{} indices",
            lemmas.tower_lemma.len()
        ),
    );
    line(lemmas.strictly_increasing, "iterates strictly increase".into());

    let adaptive: Vec<_> = [1e2, 1e4, 1e6, 1e9]
        .iter()
        .flat_map(|&n| [1.0, 4.0, 32.0].map(|r| check_adaptive_recurrence(n, n * r)))
        .collect();
    line(
        adaptive.iter().all(|a| a.holds),
        format!("adaptive rounds within base-2^(m/n) log*: {} settings", adaptive.len()),
    );

    let (mut evaluations, mut broken) = (0u64, 0u64);
    for c in 0..args.circuits {
        let seed = args.seed.wrapping_add(c);
        let mut r = rng(seed);
        let inputs = r.gen_range(1..=6);
        let circuit = random_circuit(seed, inputs, r.gen_range(1..=12));
        for a in 0..10u64 {
            let values: Vec<u32> = (0..inputs).map(|_| r.gen_range(0..8)).collect();
            let output = evaluate(&circuit, &values).map_err(|e| Failure::usage(e.to_string()))?;
            broken += u64::from(!values.contains(&output));
            let mut distinct = values.clone();
            distinct.sort_unstable();
            distinct.dedup();
            for m in 0..5u64 {
                let map = random_monotone_map(seed.wrapping_mul(100) + a * 10 + m, distinct.len());
                evaluations += 1;
                let ok = check_commutation(&circuit, &values, &map).map_err(|e| Failure::usage(e.to_string()))?;
                broken += u64::from(!ok);
            }
        }
    }
    line(
        broken == 0,
        format!(
            "{} circuits: outputs are inputs and commute with {evaluations} monotone maps",
            args.circuits
        ),
    );

    if failed == 0 {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure {
            code: 1,
            message: format!("{failed} checks failed"),
        })
    }
}
