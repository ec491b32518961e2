//! Simple undirected graphs, the graph families used throughout the crate,
//! and a few exact structural queries.
//!
//! Vertices are dense ids `0..n`. Catalog instances additionally carry a
//! label table mapping human-readable names to ids.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{invalid, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    matrix: Vec<BitSet>,
    labels: BTreeMap<String, Vertex>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge {u}-{v} out of range for {n} vertices")));
            }
            if u == v {
                return Err(invalid(format!("loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(invalid(format!("duplicate edge {}-{}", e.0, e.1)));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    /// Like [`Graph::new`] but silently merges repeated edges.
    pub(crate) fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let set: BTreeSet<_> = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u != v && u < n && v < n, "bad edge {u}-{v}");
                (u.min(v), u.max(v))
            })
            .collect();
        Self::from_edge_set(n, set)
    }

    fn from_edge_set(n: usize, set: BTreeSet<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut matrix = vec![BitSet::new(n); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
            matrix[u].insert(v);
            matrix[v].insert(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
            matrix,
            labels: BTreeMap::new(),
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edge_set(n, BTreeSet::new())
    }

    pub fn with_labels(mut self, labels: BTreeMap<String, Vertex>) -> Result<Self> {
        if let Some((name, &id)) = labels.iter().find(|(_, &id)| id >= self.n) {
            return Err(invalid(format!("label `{name}` points at missing vertex {id}")));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.matrix[u].contains(v)
    }

    pub(crate) fn neighbour_bits(&self, v: Vertex) -> &BitSet {
        &self.matrix[v]
    }

    pub fn labels(&self) -> &BTreeMap<String, Vertex> {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<Vertex> {
        self.labels.get(label).copied()
    }

    /// Name of a vertex if the label table has one.
    pub fn label_of(&self, v: Vertex) -> Option<&str> {
        self.labels.iter().find(|(_, &id)| id == v).map(|(k, _)| k.as_str())
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Subgraph induced by `keep` (in the given order); vertex `i` of the
    /// result is `keep[i]`.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let pos: BTreeMap<Vertex, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((*pos.get(&u)?, *pos.get(&v)?)));
        Graph::from_edges_dedup(keep.len(), edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::from_edges_dedup(self.n + other.n, edges)
    }

    /// Checks a 2-partition `(x, y)` of all vertices with every edge crossing.
    pub fn is_bipartition(&self, x: &[Vertex], y: &[Vertex]) -> bool {
        let mut side = vec![None; self.n];
        for (s, part) in [x, y].into_iter().enumerate() {
            for &v in part {
                if v >= self.n || side[v].is_some() {
                    return false;
                }
                side[v] = Some(s);
            }
        }
        side.iter().all(Option::is_some) && self.edges.iter().all(|&(u, v)| side[u] != side[v])
    }

    /// A 2-colouring by BFS, if the graph is bipartite.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let mut side = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if side[s] != usize::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        let x = (0..self.n).filter(|&v| side[v] == 0).collect();
        let y = (0..self.n).filter(|&v| side[v] == 1).collect();
        Some((x, y))
    }
}

// ---------------------------------------------------------------------------
// Constructors

pub fn complete(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    Graph::from_edges_dedup(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (1..n).map(|v| (v - 1, v)))
}

/// The cycle `C_n` on vertices `0..n` in cyclic order.
pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Ok(Graph::from_edges_dedup(n, (0..n).map(|v| (v, (v + 1) % n))))
}

/// Result of `G[S : H1, H2]`: vertex `i` of `graph` is the pair `pairs[i]`.
#[derive(Clone, Debug)]
pub struct BlowUp {
    pub graph: Graph,
    pub pairs: Vec<(Vertex, Vertex)>,
}

/// Replaces each vertex of `s` by a copy of `h1` and every other vertex by a
/// copy of `h2`. Copies of adjacent base vertices are completely joined.
pub fn blowup_product(g: &Graph, s: &[Vertex], h1: &Graph, h2: &Graph) -> Result<BlowUp> {
    if let Some(&bad) = s.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(invalid(format!("vertex {bad} not in base graph")));
    }
    let in_s: BTreeSet<Vertex> = s.iter().copied().collect();
    let mut pairs = Vec::new();
    let mut start = Vec::with_capacity(g.vertex_count());
    for u in 0..g.vertex_count() {
        start.push(pairs.len());
        let h = if in_s.contains(&u) { h1 } else { h2 };
        pairs.extend((0..h.vertex_count()).map(|v| (u, v)));
    }
    let mut edges = Vec::new();
    for (u, &base) in start.iter().enumerate().take(g.vertex_count()) {
        let h = if in_s.contains(&u) { h1 } else { h2 };
        edges.extend(h.edges().iter().map(|&(a, b)| (base + a, base + b)));
    }
    for &(u, w) in g.edges() {
        let hu = if in_s.contains(&u) { h1 } else { h2 };
        let hw = if in_s.contains(&w) { h1 } else { h2 };
        for a in 0..hu.vertex_count() {
            for b in 0..hw.vertex_count() {
                edges.push((start[u] + a, start[w] + b));
            }
        }
    }
    Ok(BlowUp {
        graph: Graph::from_edges_dedup(pairs.len(), edges),
        pairs,
    })
}

/// `C_{2k+1}[I : K_n, K_m]` with `I = {v_1, v_3, ..., v_{2k-1}}`.
#[derive(Clone, Debug)]
pub struct Gnmk {
    pub graph: Graph,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    /// Cycle position `0..=2k` of each vertex.
    pub class_of: Vec<usize>,
}

impl Gnmk {
    pub fn classes(&self) -> usize {
        2 * self.k + 1
    }

    pub fn class_members(&self, class: usize) -> Vec<Vertex> {
        (0..self.graph.vertex_count())
            .filter(|&v| self.class_of[v] == class)
            .collect()
    }

    /// `n + m + m/k`.
    pub fn fractional_value(&self) -> crate::Rational {
        crate::Rational::new((self.k * (self.n + self.m) + self.m) as i64, self.k as i64)
    }
}

pub fn build_gnmk(n: usize, m: usize, k: usize) -> Result<Gnmk> {
    if n == 0 || m == 0 || k == 0 {
        return Err(invalid("n, m and k must be positive"));
    }
    let cycle = build_cycle(2 * k + 1)?;
    let independent: Vec<Vertex> = (0..k).map(|i| 2 * i + 1).collect();
    let blow = blowup_product(&cycle, &independent, &complete(n), &complete(m))?;
    let class_of = blow.pairs.iter().map(|&(u, _)| u).collect();
    Ok(Gnmk {
        graph: blow.graph,
        n,
        m,
        k,
        class_of,
    })
}

/// Line graph of a bipartite graph with the endpoints of each source edge.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// Source edge of each line-graph vertex as `(x_end, y_end)`.
    pub source: Vec<(Vertex, Vertex)>,
}

pub fn line_graph_of_bipartite(h: &Graph, x: &[Vertex], y: &[Vertex]) -> Result<LineGraph> {
    if !h.is_bipartition(x, y) {
        return Err(invalid("partition is not a proper bipartition"));
    }
    let in_x: BTreeSet<Vertex> = x.iter().copied().collect();
    let source: Vec<(Vertex, Vertex)> = h
        .edges()
        .iter()
        .map(|&(a, b)| if in_x.contains(&a) { (a, b) } else { (b, a) })
        .collect();
    let mut edges = Vec::new();
    for i in 0..source.len() {
        for j in i + 1..source.len() {
            if source[i].0 == source[j].0 || source[i].1 == source[j].1 {
                edges.push((i, j));
            }
        }
    }
    Ok(LineGraph {
        graph: Graph::from_edges_dedup(source.len(), edges),
        source,
    })
}

// ---------------------------------------------------------------------------
// Structural queries

/// Exact independence number with one maximum independent set.
pub fn independence_number(g: &Graph) -> (usize, Vec<Vertex>) {
    let n = g.vertex_count();
    let conflict: Vec<BitSet> = (0..n).map(|v| g.neighbour_bits(v).clone()).collect();
    max_independent(&conflict)
}

/// Exact clique number with one maximum clique.
pub fn clique_number(g: &Graph) -> (usize, Vec<Vertex>) {
    let n = g.vertex_count();
    let conflict: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut s = BitSet::full(n);
            s.difference_with(g.neighbour_bits(v));
            s.remove(v);
            s
        })
        .collect();
    max_independent(&conflict)
}

/// Branch and bound for a maximum set with no two members joined in
/// `conflict`. Bounded by a greedy clique cover of the candidates.
fn max_independent(conflict: &[BitSet]) -> (usize, Vec<Vertex>) {
    let n = conflict.len();
    let mut best = Vec::new();
    let mut current = Vec::new();
    let candidates = BitSet::full(n);
    mis_branch(conflict, candidates, &mut current, &mut best);
    best.sort_unstable();
    (best.len(), best)
}

fn mis_branch(conflict: &[BitSet], mut cand: BitSet, current: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
    loop {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        if current.len() + clique_cover_bound(conflict, &cand) <= best.len() {
            return;
        }
        // Branch on the candidate with most conflicts among candidates.
        let v = cand
            .iter()
            .max_by_key(|&v| (conflict[v].intersection_count(&cand), std::cmp::Reverse(v)))
            .expect("non-empty");
        let mut with_v = cand.clone();
        with_v.difference_with(&conflict[v]);
        with_v.remove(v);
        current.push(v);
        mis_branch(conflict, with_v, current, best);
        current.pop();
        cand.remove(v);
    }
}

/// Number of classes in a greedy partition of `cand` into sets that are
/// pairwise conflicting; an independent set uses at most one per class.
fn clique_cover_bound(conflict: &[BitSet], cand: &BitSet) -> usize {
    let mut classes: Vec<BitSet> = Vec::new();
    for v in cand.iter() {
        match classes.iter_mut().find(|c| c.is_subset(&conflict[v])) {
            Some(c) => c.insert(v),
            None => {
                let mut c = BitSet::new(conflict.len());
                c.insert(v);
                classes.push(c);
            }
        }
    }
    classes.len()
}

/// Whether `g` contains a cycle on exactly `len` vertices.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> Result<bool> {
    if len < 3 {
        return Err(invalid(format!("cycle length must be at least 3, got {len}")));
    }
    let n = g.vertex_count();
    if len > n {
        return Ok(false);
    }
    let mut on_path = vec![false; n];
    for start in 0..n {
        on_path[start] = true;
        let found = extend_path(g, start, start, 1, len, &mut on_path);
        on_path[start] = false;
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

// Only vertices larger than `start` may appear, so each cycle is rooted at
// its minimum vertex.
fn extend_path(g: &Graph, start: Vertex, tip: Vertex, depth: usize, len: usize, on_path: &mut [bool]) -> bool {
    if depth == len {
        return g.has_edge(tip, start);
    }
    for &w in g.neighbours(tip) {
        if w <= start || on_path[w] {
            continue;
        }
        on_path[w] = true;
        let found = extend_path(g, start, w, depth + 1, len, on_path);
        on_path[w] = false;
        if found {
            return true;
        }
    }
    false
}

/// All automorphisms as vertex permutations, by backtracking. Intended for
/// small graphs only; returns `None` once `limit` permutations are found.
pub fn automorphisms(g: &Graph, limit: usize) -> Option<Vec<Vec<Vertex>>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        v: usize,
        image: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> bool {
        let n = g.vertex_count();
        if v == n {
            out.push(image.to_vec());
            return out.len() < limit;
        }
        for w in 0..n {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], w)) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            let keep_going = rec(g, v + 1, image, used, out, limit);
            used[w] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
    if rec(g, 0, &mut image, &mut used, &mut out, limit) {
        Some(out)
    } else {
        None
    }
}

/// Brute-force isomorphism test for small graphs.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.vertex_count();
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn rec(a: &Graph, b: &Graph, v: usize, image: &mut [usize], used: &mut [bool]) -> bool {
        let n = a.vertex_count();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(image[u], w)) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if rec(a, b, v + 1, image, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    rec(a, b, 0, &mut vec![0; n], &mut vec![false; n])
}

// ---------------------------------------------------------------------------
// JSON interchange

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, Vertex>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels: (!g.labels.is_empty()).then(|| g.labels.clone()),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = crate::Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        let g = Graph::new(j.n, j.edges.iter().map(|e| (e[0], e[1])))?;
        g.with_labels(j.labels.unwrap_or_default())
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: GraphJson = serde_json::from_str(s)?;
        Graph::try_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_basics() {
        let c5 = build_cycle(5).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        assert_eq!(independence_number(&c5).0, 2);
        assert!(is_isomorphic(&build_cycle(3).unwrap(), &complete(3)));
        let c7 = build_cycle(7).unwrap();
        assert_eq!(c7.edge_count(), 7);
        // odd girth 7: no shorter odd cycle
        assert!(!has_cycle_of_length(&c7, 3).unwrap());
        assert!(!has_cycle_of_length(&c7, 5).unwrap());
        assert!(has_cycle_of_length(&c7, 7).unwrap());
        assert!(build_cycle(2).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn blowup_of_triangle_is_k4() {
        let c3 = build_cycle(3).unwrap();
        let b = blowup_product(&c3, &[1], &complete(2), &complete(1)).unwrap();
        assert_eq!(b.graph.vertex_count(), 4);
        assert_eq!(b.graph.edge_count(), 6);
        assert!(is_isomorphic(&b.graph, &complete(4)));
    }

    #[test]
    fn identity_blowup() {
        let c5 = build_cycle(5).unwrap();
        let all: Vec<_> = (0..5).collect();
        let b = blowup_product(&c5, &all, &complete(1), &complete(1)).unwrap();
        assert!(is_isomorphic(&b.graph, &c5));
        assert!(blowup_product(&c5, &[5], &complete(1), &complete(1)).is_err());
    }

    #[test]
    fn lexicographic_product_is_vertex_transitive() {
        let c5 = build_cycle(5).unwrap();
        let all: Vec<_> = (0..5).collect();
        let b = blowup_product(&c5, &all, &complete(2), &complete(2)).unwrap();
        assert_eq!(b.graph.vertex_count(), 10);
        let autos = automorphisms(&b.graph, 100_000).unwrap();
        let orbit: BTreeSet<_> = autos.iter().map(|p| p[0]).collect();
        assert_eq!(orbit.len(), 10);
    }

    #[test]
    fn gnmk_shapes() {
        let g = build_gnmk(6, 4, 3).unwrap();
        assert_eq!(g.graph.vertex_count(), 34);
        let sizes: Vec<usize> = (0..7).map(|c| g.class_members(c).len()).collect();
        assert_eq!(sizes, vec![4, 6, 4, 6, 4, 6, 4]);
        assert_eq!(independence_number(&g.graph).0, 3);
        assert!(is_isomorphic(
            &build_gnmk(1, 1, 2).unwrap().graph,
            &build_cycle(5).unwrap()
        ));
        assert!(is_isomorphic(&build_gnmk(2, 1, 1).unwrap().graph, &complete(4)));
        // Fig. 1 base: C_7 with a maximum independent set blown up
        let c7 = build_cycle(7).unwrap();
        let (_, mis) = independence_number(&c7);
        let b = blowup_product(&c7, &mis, &complete(6), &complete(4)).unwrap();
        assert_eq!(b.graph.vertex_count(), 34);
    }

    #[test]
    fn gnmk_independence_is_k() {
        for n in 1..=3 {
            for m in 1..=n {
                for k in 1..=3 {
                    let g = build_gnmk(n, m, k).unwrap();
                    assert_eq!(g.graph.vertex_count(), k * n + (k + 1) * m);
                    assert_eq!(independence_number(&g.graph).0, k, "G_{{{n},{m},{k}}}");
                }
            }
        }
    }

    #[test]
    fn line_graphs() {
        let k22 = complete_bipartite(2, 2);
        let l = line_graph_of_bipartite(&k22, &[0, 1], &[2, 3]).unwrap();
        assert!(is_isomorphic(&l.graph, &build_cycle(4).unwrap()));

        let p3 = path(3);
        let l = line_graph_of_bipartite(&p3, &[0, 2], &[1]).unwrap();
        assert!(is_isomorphic(&l.graph, &complete(2)));

        let k33 = complete_bipartite(3, 3);
        let l = line_graph_of_bipartite(&k33, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert_eq!(l.graph.vertex_count(), 9);
        assert_eq!(clique_number(&l.graph).0, 3);
        // maximal triangles: brute force over all triples
        let mut triangles = 0;
        for a in 0..9 {
            for b in a + 1..9 {
                for c in b + 1..9 {
                    if l.graph.is_clique(&[a, b, c]) {
                        triangles += 1;
                    }
                }
            }
        }
        assert_eq!(triangles, 6);

        assert!(line_graph_of_bipartite(&k22, &[0, 2], &[1, 3]).is_err());
    }

    #[test]
    fn small_cliques_and_independence() {
        assert_eq!(independence_number(&complete(4)).0, 1);
        assert_eq!(clique_number(&complete(4)).0, 4);
        assert_eq!(clique_number(&build_cycle(5).unwrap()).0, 2);
        assert_eq!(independence_number(&Graph::empty(0)).0, 0);
    }

    #[test]
    fn json_round_trip_keeps_labels() {
        let mut labels = BTreeMap::new();
        labels.insert("u".to_string(), 0);
        let g = path(3).with_labels(labels).unwrap();
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.vertex("u"), Some(0));
    }
}
