use minmax_core::game::{solve_game, verify_strategies, MaxPayoffGame, Player};
use minmax_core::generate::{random_game, random_network, NetworkShape};
use minmax_core::global::global_solve;
use minmax_core::interdiction::{solve_interdiction, verify_interdiction, widest_path, InterdictionNetwork, NetArc};
use minmax_core::order::{select_rank, sort_positions, split_into_groups};
use minmax_core::{Algorithm, AnswerOutcome, ComparableStore};
use proptest::prelude::*;

fn game_value(game: &MaxPayoffGame, keys: &[u64], alg: Algorithm) -> AnswerOutcome {
    solve_game(game, &ComparableStore::new(keys.to_vec()), alg)
        .unwrap()
        .0
        .outcome
}

fn width(net: &InterdictionNetwork, keys: &[u64], alg: Algorithm) -> AnswerOutcome {
    solve_interdiction(net, &ComparableStore::new(keys.to_vec()), alg)
        .unwrap()
        .0
        .outcome
}

fn algorithm() -> impl Strategy<Value = Algorithm> {
    prop::sample::select(Algorithm::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn select_agrees_with_sort(keys in prop::collection::vec(0u32..50, 1..80), pick in any::<prop::sample::Index>()) {
        let store = ComparableStore::new(keys.clone());
        let all: Vec<usize> = (0..keys.len()).collect();
        let sorted = sort_positions(&store, &all).unwrap();
        let rank = pick.index(keys.len());
        prop_assert_eq!(select_rank(&store, &all, rank).unwrap(), sorted[rank]);
    }

    #[test]
    fn groups_are_ordered_and_balanced(keys in prop::collection::vec(0u32..1000, 1..120), log in 0u32..5) {
        let groups = 1usize << log;
        prop_assume!(groups <= keys.len());
        let store = ComparableStore::new(keys.clone());
        let all: Vec<usize> = (0..keys.len()).collect();
        let parts = split_into_groups(&store, &all, groups).unwrap();
        prop_assert_eq!(parts.len(), groups);
        let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        prop_assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
        for w in parts.windows(2) {
            let hi = w[0].iter().map(|&p| (keys[p], p)).max().unwrap();
            let lo = w[1].iter().map(|&p| (keys[p], p)).min().unwrap();
            prop_assert!(hi < lo);
        }
    }

    /// Solvers only look at the order, so a strictly increasing relabeling
    /// of the keys keeps the answer position.
    #[test]
    fn answers_invariant_under_increasing_maps(seed in 0u64..10_000, alg in algorithm(), scale in 1u64..7, shift in 0u64..1000) {
        let (game, keys) = random_game(seed, 6, 15).unwrap();
        let mapped: Vec<u64> = keys.iter().map(|k| k * scale + shift).collect();
        prop_assert_eq!(game_value(&game, &keys, alg), game_value(&game, &mapped, alg));

        let shape = NetworkShape { vertices: 6, arcs: 12, budget_max: 2, ensure_path: true };
        let (net, keys) = random_network(seed, shape).unwrap();
        let mapped: Vec<u64> = keys.iter().map(|k| k * scale + shift).collect();
        prop_assert_eq!(width(&net, &keys, alg), width(&net, &mapped, alg));
    }

    /// Handing a node to Max can only help Max.
    #[test]
    fn ownership_to_max_never_lowers_value(seed in 0u64..10_000, node in 0usize..6) {
        let (game, keys) = random_game(seed, 6, 14).unwrap();
        let mut stronger = game.clone();
        stronger.owners[node] = Player::Max;
        let key = |g: &MaxPayoffGame| keys[game_value(g, &keys, Algorithm::Logstar).position().unwrap()];
        prop_assert!(key(&stronger) >= key(&game));
    }

    /// A larger budget can only lower the residual width.
    #[test]
    fn budgets_are_monotone(seed in 0u64..10_000, vertex in 0usize..7) {
        let shape = NetworkShape { vertices: 7, arcs: 14, budget_max: 1, ensure_path: true };
        let (net, keys) = random_network(seed, shape).unwrap();
        let mut budgets = net.budgets.clone();
        budgets[vertex] += 1;
        let richer = net.clone().with_budgets(budgets);
        let key = |o: AnswerOutcome| o.position().map(|p| keys[p]);
        prop_assert!(key(width(&richer, &keys, Algorithm::Logstar)) <= key(width(&net, &keys, Algorithm::Logstar)));
    }

    #[test]
    fn zero_budgets_give_the_widest_path(seed in 0u64..10_000, alg in algorithm()) {
        let shape = NetworkShape { vertices: 8, arcs: 20, budget_max: 0, ensure_path: false };
        let (net, keys) = random_network(seed, shape).unwrap();
        let store = ComparableStore::new(keys.clone());
        let widest = widest_path(&net, &store);
        prop_assert_eq!(width(&net, &keys, alg), widest);
        prop_assert_eq!(global_solve(&net, &store, 0).unwrap(), widest);
    }

    #[test]
    fn global_width_falls_with_k(seed in 0u64..10_000) {
        let shape = NetworkShape { vertices: 8, arcs: 20, budget_max: 0, ensure_path: true };
        let (net, keys) = random_network(seed, shape).unwrap();
        let store = ComparableStore::new(keys.clone());
        let widths: Vec<Option<u64>> = (0..4).map(|k| global_solve(&net, &store, k).unwrap().position().map(|p| keys[p])).collect();
        prop_assert!(widths.windows(2).all(|w| w[1] <= w[0]), "{:?}", widths);
    }
}

#[test]
fn medium_networks_agree_across_algorithms() {
    for seed in 0..40 {
        let shape = NetworkShape {
            vertices: 200,
            arcs: 800,
            budget_max: 3,
            ensure_path: true,
        };
        let (net, keys) = random_network(seed, shape).unwrap();
        let store = ComparableStore::new(keys.clone());
        let (sorted, _) = solve_interdiction(&net, &store, Algorithm::Sorted).unwrap();
        for alg in Algorithm::ALL {
            let store = ComparableStore::new(keys.clone());
            let (report, solution) = solve_interdiction(&net, &store, alg).unwrap();
            assert_eq!(report.outcome, sorted.outcome, "seed {seed} {alg}");
            assert!(verify_interdiction(&net, &store, &solution), "seed {seed} {alg}");
        }
    }
}

#[test]
fn medium_games_verify() {
    for seed in 0..40 {
        let (game, keys) = random_game(seed, 50, 200).unwrap();
        let reference = game_value(&game, &keys, Algorithm::Sorted);
        for alg in Algorithm::ALL {
            let store = ComparableStore::new(keys.clone());
            let (report, solution) = solve_game(&game, &store, alg).unwrap();
            assert_eq!(report.outcome, reference);
            assert!(verify_strategies(&game, &store, &solution));
        }
    }
}

/// With a single comparable the answer may still be "disconnected"; every
/// variant must ask the ordered solver at least once.
#[test]
fn lone_arc_can_be_cut() {
    let arc = NetArc {
        tail: 0,
        head: 1,
        capacity: 0,
    };
    let net = InterdictionNetwork::new(2, vec![arc], 0, 1).with_budgets(vec![1, 0]);
    for alg in Algorithm::ALL {
        let (report, solution) = solve_interdiction(&net, &ComparableStore::new(vec![5]), alg).unwrap();
        assert_eq!(report.outcome, AnswerOutcome::BelowAll, "{alg}");
        assert_eq!(report.iterations, 1);
        assert_eq!(solution.removed, vec![0]);
    }
}
