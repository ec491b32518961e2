//! Canonical enumeration against a plain enumerator that tries every list
//! assignment over a fixed universe.

use multifold::choosability::{is_ab_choosable_with, Choosability, ChooseOptions};
use multifold::colouring::{uniform_fold, ListAssignment};
use multifold::graph::Graph;
use multifold::solver::solve_list_colouring;

fn subsets(universe: u32, k: usize) -> Vec<u32> {
    (0u32..1 << universe).filter(|m| m.count_ones() as usize == k).collect()
}

/// Tries every choice of b-subsets, no pruning.
fn brute_colourable(g: &Graph, lists: &[u32], b: usize) -> bool {
    fn go(g: &Graph, lists: &[u32], b: usize, v: usize, chosen: &mut Vec<u32>) -> bool {
        if v == lists.len() {
            return true;
        }
        let mut sub = lists[v];
        loop {
            if sub.count_ones() as usize == b && (0..v).all(|u| !g.has_edge(u, v) || chosen[u] & sub == 0) {
                chosen.push(sub);
                if go(g, lists, b, v + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & lists[v];
        }
    }
    go(g, lists, b, 0, &mut Vec::new())
}

fn brute_choosable(g: &Graph, a: usize, b: usize, universe: u32) -> bool {
    let options = subsets(universe, a);
    let n = g.vertex_count();
    let mut idx = vec![0usize; n];
    loop {
        let lists: Vec<u32> = idx.iter().map(|&i| options[i]).collect();
        if !brute_colourable(g, &lists, b) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == n {
                return true;
            }
            idx[i] += 1;
            if idx[i] < options.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|m| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

#[test]
fn agrees_with_plain_enumeration_on_small_graphs() {
    let mut checked = 0;
    for n in 1..=4 {
        for g in all_graphs(n) {
            for (a, b) in [(1, 1), (2, 1), (2, 2)] {
                let universe = (n * a).min(6);
                let opts = ChooseOptions {
                    universe: Some(universe),
                    ..ChooseOptions::default()
                };
                let fast = is_ab_choosable_with(&g, a, b, &opts).unwrap();
                let slow = brute_choosable(&g, a, b, universe as u32);
                match fast {
                    Choosability::Choosable => assert!(slow, "n={n} edges={:?} ({a},{b})", g.edges()),
                    Choosability::NotChoosable(w) => {
                        assert!(!slow, "n={n} edges={:?} ({a},{b})", g.edges());
                        let fold = uniform_fold(n, b);
                        assert!(solve_list_colouring(&g, &w, &fold).unwrap().is_none());
                        assert!(w.sizes().iter().all(|&s| s == a));
                    }
                    Choosability::Timeout => panic!("no budget was set"),
                }
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 3 * (1 + 2 + 8 + 64));
}

#[test]
fn witness_lists_round_trip_through_json() {
    let g = multifold::graph::complete_bipartite(2, 4);
    let Choosability::NotChoosable(w) = is_ab_choosable_with(&g, 2, 1, &ChooseOptions::default()).unwrap() else {
        panic!("K_{{2,4}} is not 2-choosable");
    };
    assert_eq!(ListAssignment::from_json(&g, &w.to_json()).unwrap(), w);
}
