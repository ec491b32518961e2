use std::collections::HashMap;

use multifold::colouring::BFoldColouring;
use multifold::graph::{build_cycle, build_gnmk, Graph};
use multifold::painting::{
    find_kernel, galvin_orientation, kfold_paint_number, play_game, solve_paintable_exact, strategy_cyclic,
    strategy_fractional, strategy_kernel, uniform_game, verify_strategy, GameState, ListerStrategy, PainterStrategy,
    RandomLister, Winner,
};
use multifold::solver::solve_ab_colouring;
use multifold::Rational;
use proptest::prelude::*;

/// Plain minimax over every Lister set and every independent Painter answer.
fn naive_lister_wins(
    g: &Graph,
    tokens: Vec<u32>,
    debt: Vec<u32>,
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), bool>,
) -> bool {
    let n = g.vertex_count();
    if (0..n).all(|v| debt[v] == 0) {
        return false;
    }
    if (0..n).any(|v| debt[v] > 0 && tokens[v] == 0) {
        return true;
    }
    let key = (tokens.clone(), debt.clone());
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let live: Vec<usize> = (0..n).filter(|&v| debt[v] > 0).collect();
    let mut result = false;
    'lister: for um in 1u32..1 << live.len() {
        let u: Vec<usize> = (0..live.len()).filter(|i| um >> i & 1 == 1).map(|i| live[i]).collect();
        for xm in 0u32..1 << u.len() {
            let x: Vec<usize> = (0..u.len()).filter(|i| xm >> i & 1 == 1).map(|i| u[i]).collect();
            if !g.is_independent(&x) {
                continue;
            }
            let mut t = tokens.clone();
            let mut d = debt.clone();
            for &v in &u {
                t[v] -= 1;
            }
            for &v in &x {
                d[v] -= 1;
            }
            if !naive_lister_wins(g, t, d, memo) {
                continue 'lister;
            }
        }
        result = true;
        break;
    }
    memo.insert(key, result);
    result
}

fn small_graphs() -> impl Strategy<Value = Graph> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn random_bipartite() -> impl Strategy<Value = Graph> {
    (1usize..=3, 1usize..=3, proptest::collection::vec(any::<bool>(), 9)).prop_map(|(x, y, bits)| {
        let mut edges = Vec::new();
        for i in 0..x {
            for j in 0..y {
                if bits[i * 3 + j] {
                    edges.push((i, x + j));
                }
            }
        }
        if edges.is_empty() {
            edges.push((0, x));
        }
        Graph::new(x + y, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exact_solver_matches_naive_minimax(g in small_graphs(), a in 1u32..=3, b in 1u32..=2) {
        prop_assume!(a >= b);
        let n = g.vertex_count();
        let naive = naive_lister_wins(&g, vec![a; n], vec![b; n], &mut HashMap::new());
        let fast = solve_paintable_exact(&g, &vec![a; n], &vec![b; n]).unwrap();
        prop_assert_eq!(fast == Winner::Lister, naive);
    }

    #[test]
    fn cyclic_strategy_respects_case_one_bound(n in 1usize..=3, dm in 0usize..=2, k in 1usize..=3, t in 1usize..=2, seed in any::<u64>()) {
        let m = n.saturating_sub(dm).max(1);
        let gn = build_gnmk(n, m, k).unwrap();
        let a = (t * (k * (n + m) + m)) as u32;
        let b = (t * k) as u32;
        let (f, g) = uniform_game(gn.graph.vertex_count(), a, b);
        let mut painter = strategy_cyclic(&gn);
        let tr = play_game(&gn.graph, &f, &g, &mut painter, &mut RandomLister::new(seed), 100_000).unwrap();
        prop_assert_eq!(tr.winner, Winner::Painter);
        prop_assert!(Rational::from_integer(painter.case1_count() as i64) <= painter.bound(b as usize));
        tr.replay(&gn.graph, &f, &g).unwrap();
    }

    #[test]
    fn galvin_orientations_are_kernel_perfect(h in random_bipartite()) {
        let go = galvin_orientation(&h).unwrap();
        let d = &go.orientation;
        prop_assert!(d.orients(&go.line.graph));
        prop_assert!(d.max_out_degree() < h.max_degree().max(1));
        let e = d.vertex_count();
        for mask in 1u32..1 << e {
            let x: Vec<usize> = (0..e).filter(|i| mask >> i & 1 == 1).collect();
            prop_assert!(find_kernel(d, &x).is_some());
        }
    }

    #[test]
    fn kernel_strategy_keeps_its_invariant(h in random_bipartite(), m in 1u32..=2, seed in any::<u64>()) {
        let go = galvin_orientation(&h).unwrap();
        let d = &go.orientation;
        let f: Vec<u32> = (0..d.vertex_count()).map(|v| m * (d.out_degree(v) as u32 + 1)).collect();
        let g = vec![m; d.vertex_count()];
        let mut painter = strategy_kernel(d, &f, &g).unwrap();
        let tr = play_game(&go.line.graph, &f, &g, &mut painter, &mut RandomLister::new(seed), 10_000).unwrap();
        prop_assert_eq!(tr.winner, Winner::Painter);
        prop_assert!(tr.protocol_error.is_none());
        prop_assert_eq!(painter.checks() as usize, tr.rounds.len());
    }

    #[test]
    fn engine_bookkeeping(g in small_graphs(), a in 1u32..=4, seed in any::<u64>()) {
        struct Greedy;
        impl PainterStrategy for Greedy {
            fn paint(&mut self, s: &GameState, u: &[usize]) -> multifold::Result<Vec<usize>> {
                let mut x: Vec<usize> = Vec::new();
                for &v in u {
                    if x.iter().all(|&w| !s.graph().has_edge(v, w)) {
                        x.push(v);
                    }
                }
                Ok(x)
            }
        }
        let n = g.vertex_count();
        let (f, debt) = uniform_game(n, a, 1);
        let mut state = GameState::new(&g, &f, &debt).unwrap();
        let mut lister = RandomLister::new(seed);
        while state.outcome().is_none() {
            let u = lister.choose(&state).unwrap();
            let x = Greedy.paint(&state, &u).unwrap();
            let (t0, d0) = (state.tokens().to_vec(), state.debt().to_vec());
            state.apply(&u, &x).unwrap();
            for v in 0..n {
                prop_assert_eq!(state.tokens()[v] + u.contains(&v) as u32, t0[v]);
                prop_assert_eq!(state.debt()[v] + x.contains(&v) as u32, d0[v]);
            }
        }
    }

    #[test]
    fn fractional_strategy_moves_are_legal(seed in any::<u64>(), a in 5u32..=12) {
        let c5 = build_cycle(5).unwrap();
        let phi = solve_ab_colouring(&c5, 5, 2).unwrap().unwrap();
        let mut painter = strategy_fractional(&c5, &phi, 5).unwrap();
        let (f, g) = uniform_game(5, a, 2);
        let tr = play_game(&c5, &f, &g, &mut painter, &mut RandomLister::new(seed), 10_000).unwrap();
        prop_assert!(tr.protocol_error.is_none());
        tr.replay(&c5, &f, &g).unwrap();
    }
}

#[test]
fn cyclic_strategy_beats_every_lister_on_small_instances() {
    for (n, m, k) in [(1, 1, 1), (1, 1, 2)] {
        let gn = build_gnmk(n, m, k).unwrap();
        let a = (k * (n + m) + m) as u32;
        let (f, g) = uniform_game(gn.graph.vertex_count(), a, k as u32);
        let v = verify_strategy(&gn.graph, &f, &g, &strategy_cyclic(&gn), 1_000_000).unwrap();
        assert!(v.painter_always_wins, "G_{{{n},{m},{k}}}: {:?}", v.counterexample);
    }
}

#[test]
fn verification_finds_a_losing_line() {
    // below the threshold some Lister beats the strategy
    let gn = build_gnmk(1, 1, 2).unwrap();
    let (f, g) = uniform_game(5, 4, 2);
    let v = verify_strategy(&gn.graph, &f, &g, &strategy_cyclic(&gn), 1_000_000).unwrap();
    assert!(!v.painter_always_wins);
    let t = v.counterexample.unwrap();
    assert_eq!(t.winner, Winner::Lister);
    t.replay(&gn.graph, &f, &g).unwrap();
}

#[test]
fn double_paint_number_of_c5() {
    assert_eq!(kfold_paint_number(&build_cycle(5).unwrap(), 2).unwrap(), 5);
}

#[test]
fn fractional_strategy_wins_with_ample_tokens() {
    struct Repeat;
    impl ListerStrategy for Repeat {
        fn choose(&mut self, s: &GameState) -> multifold::Result<Vec<usize>> {
            Ok(s.live())
        }
    }
    let c5 = build_cycle(5).unwrap();
    let phi = BFoldColouring::from_sets([vec![0, 3], vec![1, 4], vec![0, 2], vec![1, 3], vec![2, 4]]);
    let mut painter = strategy_fractional(&c5, &phi, 5).unwrap();
    // U stays V(C_5) until vertex 3 is done after round 3
    let (f, g) = uniform_game(5, 25, 2);
    let t = play_game(&c5, &f, &g, &mut painter, &mut Repeat, 100).unwrap();
    assert_eq!(t.winner, Winner::Painter);
    for (i, r) in t.rounds.iter().take(3).enumerate() {
        let class: Vec<usize> = (0..5)
            .filter(|&v| phi.get(v).unwrap().contains(&((i as u32 + 1) % 5)))
            .collect();
        assert_eq!(r.x, class);
    }
}
