//! Solver outputs against brute-force oracles on small random graphs.

use multifold::choosability::{is_ab_choosable_with, Choosability, ChooseOptions};
use multifold::colouring::{is_proper_bfold, uniform_fold, BFoldColouring, Colour, ListAssignment};
use multifold::graph::{build_gnmk, clique_number, independence_number, line_graph_of_bipartite, Graph};
use multifold::painting::{solve_paintable_exact, Winner};
use multifold::solver::{b_fold_chromatic_number, extend_partial_colouring, solve_ab_colouring, solve_list_colouring};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn subsets(a: usize, b: usize) -> Vec<Vec<Colour>> {
    (0u32..1 << a)
        .filter(|m| m.count_ones() as usize == b)
        .map(|m| (0..a as Colour).filter(|c| m >> c & 1 == 1).collect())
        .collect()
}

/// Every assignment of one option per vertex, vertex by vertex, rejecting
/// on the first clash with an earlier neighbour.
fn brute_force(g: &Graph, options: &[Vec<Vec<Colour>>]) -> bool {
    fn go(g: &Graph, options: &[Vec<Vec<Colour>>], v: usize, pick: &mut Vec<usize>) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        for (i, s) in options[v].iter().enumerate() {
            let clash = g
                .neighbours(v)
                .iter()
                .any(|&u| u < v && options[u][pick[u]].iter().any(|c| s.contains(c)));
            if !clash {
                pick.push(i);
                if go(g, options, v + 1, pick) {
                    return true;
                }
                pick.pop();
            }
        }
        false
    }
    go(g, options, 0, &mut Vec::new())
}

fn brute_ab(g: &Graph, a: usize, b: usize) -> bool {
    let s = subsets(a, b);
    brute_force(g, &vec![s; g.vertex_count()])
}

fn brute_lists(g: &Graph, l: &ListAssignment) -> bool {
    let options: Vec<Vec<Vec<Colour>>> = (0..g.vertex_count())
        .map(|v| l.list(v).iter().map(|&c| vec![c]).collect())
        .collect();
    brute_force(g, &options)
}

fn brute_chromatic(g: &Graph) -> usize {
    (1..).find(|&k| brute_ab(g, k, 1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ab_colouring_matches_brute_force(g in graphs(6), a in 1usize..=5, b in 1usize..=2) {
        prop_assume!(a >= b);
        let found = solve_ab_colouring(&g, a, b).unwrap();
        if let Some(c) = &found {
            prop_assert!(is_proper_bfold(&g, c, &uniform_fold(g.vertex_count(), b)).unwrap());
            prop_assert!(c.iter().all(|(_, s)| s.iter().all(|&x| (x as usize) < a)));
        }
        prop_assert_eq!(found.is_some(), brute_ab(&g, a, b));
    }

    #[test]
    fn colourability_is_monotone_and_scales(g in graphs(6), a in 1usize..=4, b in 1usize..=2, t in 2usize..=3) {
        prop_assume!(a >= b);
        if solve_ab_colouring(&g, a, b).unwrap().is_some() {
            prop_assert!(solve_ab_colouring(&g, a + 1, b).unwrap().is_some());
            prop_assert!(solve_ab_colouring(&g, a * t, b * t).unwrap().is_some());
        }
    }

    #[test]
    fn chromatic_number_matches_brute_force(g in graphs(8)) {
        prop_assert_eq!(b_fold_chromatic_number(&g, 1).unwrap(), brute_chromatic(&g));
    }

    #[test]
    fn list_colouring_matches_brute_force(
        g in graphs(6),
        raw in proptest::collection::vec(proptest::collection::btree_set(1u32..=5, 1..=3), 6),
    ) {
        let l = ListAssignment::new(raw.into_iter().take(g.vertex_count()));
        let fold = uniform_fold(g.vertex_count(), 1);
        let found = solve_list_colouring(&g, &l, &fold).unwrap();
        if let Some(c) = &found {
            prop_assert!(l.admits(&g, c, &fold).unwrap());
        }
        prop_assert_eq!(found.is_some(), brute_lists(&g, &l));
    }

    #[test]
    fn extension_keeps_the_precoloured_part(g in graphs(7), keep in proptest::collection::vec(any::<bool>(), 7)) {
        let n = g.vertex_count();
        let chi = b_fold_chromatic_number(&g, 2).unwrap();
        let full = solve_ab_colouring(&g, chi, 2).unwrap().unwrap();
        let mut partial = BFoldColouring::new();
        for v in (0..n).filter(|&v| keep[v]) {
            partial.assign(v, full.get(v).unwrap().iter().copied());
        }
        let universe: Vec<Colour> = (0..chi as Colour).collect();
        let ext = extend_partial_colouring(&g, &partial, &universe, 2).unwrap().unwrap();
        prop_assert!(is_proper_bfold(&g, &ext, &uniform_fold(n, 2)).unwrap());
        for (v, s) in partial.iter() {
            prop_assert_eq!(ext.get(v), Some(s));
        }
    }

    #[test]
    fn chain_on_random_graphs(g in graphs(4), a in 1usize..=3, b in 1usize..=2) {
        prop_assume!(a >= b);
        let n = g.vertex_count();
        let colourable = solve_ab_colouring(&g, a, b).unwrap().is_some();
        let opts = ChooseOptions::default();
        let choosable = match is_ab_choosable_with(&g, a, b, &opts).unwrap() {
            Choosability::Choosable => true,
            Choosability::NotChoosable(l) => {
                prop_assert!(l.sizes().iter().all(|&s| s == a));
                prop_assert!(solve_list_colouring(&g, &l, &uniform_fold(n, b)).unwrap().is_none());
                false
            }
            Choosability::Timeout => unreachable!("no deadline"),
        };
        let paintable = solve_paintable_exact(&g, &vec![a as u32; n], &vec![b as u32; n]).unwrap() == Winner::Painter;
        prop_assert!(!choosable || colourable);
        prop_assert!(!paintable || choosable);
    }

    #[test]
    fn line_graph_cliques_match_max_degree(x in 1usize..=3, y in 1usize..=3, bits in proptest::collection::vec(any::<bool>(), 9)) {
        let mut edges = Vec::new();
        for i in 0..x {
            for j in 0..y {
                if bits[i * 3 + j] {
                    edges.push((i, x + j));
                }
            }
        }
        let h = Graph::new(x + y, edges).unwrap();
        let xs: Vec<usize> = (0..x).collect();
        let ys: Vec<usize> = (x..x + y).collect();
        let lg = line_graph_of_bipartite(&h, &xs, &ys).unwrap();
        prop_assert_eq!(lg.graph.vertex_count(), h.edge_count());
        if h.max_degree() >= 2 {
            prop_assert_eq!(clique_number(&lg.graph).0, h.max_degree());
        }
    }
}

#[test]
fn gnmk_independence_number_is_k() {
    for n in 1..=3 {
        for m in 1..=n {
            for k in 1..=3 {
                let g = build_gnmk(n, m, k).unwrap();
                let brute = (0u64..1 << g.graph.vertex_count())
                    .filter(|s| {
                        let set: Vec<usize> = (0..g.graph.vertex_count()).filter(|v| s >> v & 1 == 1).collect();
                        g.graph.is_independent(&set)
                    })
                    .map(|s| s.count_ones() as usize)
                    .max()
                    .unwrap();
                assert_eq!(brute, k, "G_{{{n},{m},{k}}}");
                assert_eq!(independence_number(&g.graph).0, k);
            }
        }
    }
}
