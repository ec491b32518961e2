//! Uniform hypergraphs, b-proper 2-colourings and the reduction from list
//! colouring of bipartite graphs.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colouring::{BFoldColouring, Colour, ListAssignment};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Edges may repeat; each edge is a set of distinct vertices.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        for e in &mut edges {
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(invalid("hyperedge repeats a vertex"));
            }
            if let Some(&v) = e.last().filter(|&&v| v >= n) {
                return Err(invalid(format!("hyperedge member {v} out of range")));
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// `Some(p)` when every edge has `p` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let p = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == p).then_some(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let h: Hypergraph = serde_json::from_str(s)?;
        Hypergraph::new(h.n, h.edges)
    }
}

/// Every edge has at least `b` vertices of colour 1 and of colour 2.
pub fn is_b_proper_2colouring(h: &Hypergraph, colouring: &[u8], b: usize) -> Result<bool> {
    if colouring.len() != h.vertex_count() {
        return Err(invalid("colouring must give every vertex a colour"));
    }
    if colouring.iter().any(|&c| c != 1 && c != 2) {
        return Err(invalid("colours must be 1 or 2"));
    }
    Ok(h.edges.iter().all(|e| {
        let ones = e.iter().filter(|&&v| colouring[v] == 1).count();
        ones >= b && e.len() - ones >= b
    }))
}

fn binomial(n: u64, k: u64) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `m · Σ_{i<b} C(p, i) / 2^{p-1}`; a value below 1 guarantees that every
/// `p`-uniform hypergraph with `m` edges is b-proper 2-colourable.
pub fn lemma41_bound(p: usize, b: usize, m: usize) -> Result<Rational> {
    if b == 0 || p < b {
        return Err(invalid(format!("need p >= b >= 1, got p = {p}, b = {b}")));
    }
    if p > 100 {
        return Err(Error::ResourceLimit(p));
    }
    let sum: i128 = (0..b as u64).map(|i| binomial(p as u64, i)).sum();
    let num = sum.checked_mul(m as i128).ok_or(Error::ResourceLimit(m))?;
    let mut den: i128 = 1 << (p - 1);
    let mut num = num;
    let g = gcd(num, den);
    num /= g;
    den /= g;
    match (i64::try_from(num), i64::try_from(den)) {
        (Ok(a), Ok(d)) => Ok(Rational::new(a, d)),
        _ => Err(Error::ResourceLimit(p)),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs().max(1)
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomColouring {
    pub colouring: Vec<u8>,
    /// Index of the successful trial, from 0.
    pub trial: u64,
}

/// The colouring tried in trial `t`: one fair bit per vertex from a ChaCha8
/// stream determined by `(seed, t)`.
pub fn trial_colouring(n: usize, seed: u64, t: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t);
    (0..n).map(|_| if rng.gen::<bool>() { 1 } else { 2 }).collect()
}

/// Uniform random 2-colourings until one is b-proper, at most `max_trials`.
pub fn random_b_proper_2colouring(
    h: &Hypergraph,
    b: usize,
    max_trials: u64,
    seed: u64,
) -> Result<Option<RandomColouring>> {
    random_b_proper_2colouring_par(h, b, max_trials, seed, 1)
}

/// As [`random_b_proper_2colouring`], spreading trials over threads. The
/// result is the lowest successful trial, whatever the thread count.
pub fn random_b_proper_2colouring_par(
    h: &Hypergraph,
    b: usize,
    max_trials: u64,
    seed: u64,
    threads: usize,
) -> Result<Option<RandomColouring>> {
    if b == 0 {
        return Err(invalid("b must be positive"));
    }
    if let Some(p) = h.uniformity() {
        if p < 2 * b {
            return Err(invalid(format!(
                "{p}-uniform edges cannot hold {b} vertices of each colour"
            )));
        }
    } else if !h.edges.is_empty() {
        return Err(invalid("hypergraph is not uniform"));
    }
    let threads = threads.max(1) as u64;
    let best = std::sync::atomic::AtomicU64::new(u64::MAX);
    let run = |w: u64| {
        let mut t = w;
        while t < max_trials && t < best.load(std::sync::atomic::Ordering::Relaxed) {
            let c = trial_colouring(h.n, seed, t);
            if is_b_proper_2colouring(h, &c, b).expect("well-formed colouring") {
                best.fetch_min(t, std::sync::atomic::Ordering::SeqCst);
                return;
            }
            t += threads;
        }
    };
    if threads == 1 {
        run(0);
    } else {
        std::thread::scope(|s| {
            for w in 0..threads {
                s.spawn(move || run(w));
            }
        });
    }
    let t = best.into_inner();
    Ok((t != u64::MAX).then(|| RandomColouring {
        colouring: trial_colouring(h.n, seed, t),
        trial: t,
    }))
}

/// The hypergraph whose vertices are the colours and whose edges are the
/// lists, one per graph vertex in vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListHypergraph {
    pub hypergraph: Hypergraph,
    /// Colour represented by each hypergraph vertex.
    pub colours: Vec<Colour>,
}

pub fn hypergraph_from_lists(g: &Graph, l: &ListAssignment, k: usize, b: usize) -> Result<ListHypergraph> {
    if l.vertex_count() != g.vertex_count() {
        return Err(invalid("list assignment does not match the graph"));
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| l.list(v).len() != k * b) {
        return Err(invalid(format!(
            "list of vertex {v} has {} colours, expected {}",
            l.list(v).len(),
            k * b
        )));
    }
    let colours: Vec<Colour> = l.universe().into_iter().collect();
    let index: BTreeMap<Colour, usize> = colours.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let edges = (0..g.vertex_count())
        .map(|v| l.list(v).iter().map(|c| index[c]).collect())
        .collect();
    Ok(ListHypergraph {
        hypergraph: Hypergraph::new(colours.len(), edges)?,
        colours,
    })
}

/// `x`-vertices take `b` colours labelled 1 from their list, `y`-vertices
/// `b` colours labelled 2.
pub fn colouring_transfer(
    g: &Graph,
    x: &[Vertex],
    y: &[Vertex],
    l: &ListAssignment,
    h: &ListHypergraph,
    colouring: &[u8],
    b: usize,
) -> Result<BFoldColouring> {
    if !g.is_bipartition(x, y) {
        return Err(invalid("partition is not a proper bipartition"));
    }
    if !is_b_proper_2colouring(&h.hypergraph, colouring, b)? {
        return Err(invalid("2-colouring is not b-proper"));
    }
    let label: BTreeMap<Colour, u8> = h.colours.iter().zip(colouring).map(|(&c, &t)| (c, t)).collect();
    let mut out = BFoldColouring::new();
    for (side, want) in [(x, 1u8), (y, 2u8)] {
        for &v in side {
            let picked: Vec<Colour> = l
                .list(v)
                .iter()
                .copied()
                .filter(|c| label.get(c) == Some(&want))
                .take(b)
                .collect();
            if picked.len() < b {
                return Err(invalid(format!("list of vertex {v} is not an edge of the hypergraph")));
            }
            out.assign(v, picked);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{is_proper_bfold, uniform_fold};
    use crate::graph::complete_bipartite;

    #[test]
    fn proper_checks() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2, 3]]).unwrap();
        assert!(is_b_proper_2colouring(&h, &[1, 1, 2, 2], 2).unwrap());
        assert!(!is_b_proper_2colouring(&h, &[1, 1, 2, 2], 3).unwrap());
        let tri = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        for m in 0..8u8 {
            let c: Vec<u8> = (0..3).map(|i| 1 + (m >> i & 1)).collect();
            assert!(!is_b_proper_2colouring(&tri, &c, 1).unwrap());
        }
        assert_eq!(random_b_proper_2colouring(&tri, 1, 500, 3).unwrap(), None);
    }

    #[test]
    fn bound_values() {
        assert_eq!(lemma41_bound(4, 1, 7).unwrap(), Rational::new(7, 8));
        assert_eq!(lemma41_bound(4, 1, 8).unwrap(), Rational::from_integer(1));
        assert_eq!(lemma41_bound(4, 2, 1).unwrap(), Rational::new(5, 8));
        assert_eq!(lemma41_bound(2, 1, 1).unwrap(), Rational::new(1, 2));
        assert_eq!(lemma41_bound(2, 1, 2).unwrap(), Rational::from_integer(1));
    }

    #[test]
    fn thread_count_does_not_change_result() {
        let h = Hypergraph::new(6, vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5], vec![0, 1, 4, 5]]).unwrap();
        let one = random_b_proper_2colouring(&h, 1, 100, 11).unwrap();
        let four = random_b_proper_2colouring_par(&h, 1, 100, 11, 4).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn reduction_examples() {
        let k11 = complete_bipartite(1, 1);
        let l = ListAssignment::new([vec![1, 2], vec![3, 4]]);
        let r = hypergraph_from_lists(&k11, &l, 2, 1).unwrap();
        assert_eq!(r.hypergraph.vertex_count(), 4);
        assert_eq!(r.hypergraph.edges(), &[vec![0, 1], vec![2, 3]]);

        let k22 = complete_bipartite(2, 2);
        let l = ListAssignment::new(vec![vec![1, 2, 3, 4]; 4]);
        let r = hypergraph_from_lists(&k22, &l, 2, 2).unwrap();
        assert_eq!(r.hypergraph.vertex_count(), 4);
        assert!(r.hypergraph.edges().iter().all(|e| e == &vec![0, 1, 2, 3]));
        let (x, y) = k22.bipartition().unwrap();
        let c = colouring_transfer(&k22, &x, &y, &l, &r, &[1, 1, 2, 2], 2).unwrap();
        for &v in &x {
            assert_eq!(c.get(v).unwrap().iter().copied().collect::<Vec<_>>(), vec![1, 2]);
        }
        for &v in &y {
            assert_eq!(c.get(v).unwrap().iter().copied().collect::<Vec<_>>(), vec![3, 4]);
        }
        assert!(is_proper_bfold(&k22, &c, &uniform_fold(4, 2)).unwrap());
        assert!(colouring_transfer(&k22, &x, &y, &l, &r, &[1, 2, 2, 2], 2).is_err());
    }

    #[test]
    fn non_uniform_lists_rejected() {
        let k11 = complete_bipartite(1, 1);
        let l = ListAssignment::new([vec![1, 2], vec![3]]);
        assert!(hypergraph_from_lists(&k11, &l, 2, 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let h = Hypergraph::from_json(r#"{"n": 3, "edges": [[2, 0], [1, 2]]}"#).unwrap();
        assert_eq!(h.edges(), &[vec![0, 2], vec![1, 2]]);
        assert_eq!(Hypergraph::from_json(&h.to_json()).unwrap(), h);
        assert!(Hypergraph::from_json(r#"{"n": 2, "edges": [[0, 5]]}"#).is_err());
    }
}
