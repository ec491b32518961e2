//! Orientations, kernels and the Galvin orientation of a bipartite line
//! graph.

use crate::error::{invalid, Result};
use crate::graph::{line_graph_of_bipartite, Graph, LineGraph, Vertex};

/// A directed graph with no loops, parallel or antiparallel arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
}

impl Orientation {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(invalid(format!("arc ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(invalid(format!("loop at {u}")));
            }
            if out[u].contains(&v) || out[v].contains(&u) {
                return Err(invalid(format!("arc between {u} and {v} given twice")));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Orientation { out, inn })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.out.len())
            .flat_map(|u| self.out[u].iter().map(move |&v| (u, v)))
            .collect()
    }

    /// An orientation of exactly the edges of `g`?
    pub fn orients(&self, g: &Graph) -> bool {
        self.vertex_count() == g.vertex_count()
            && self.arcs().len() == g.edge_count()
            && g.edges().iter().all(|&(u, v)| self.adjacent(u, v))
    }
}

/// Independent `i ⊆ x` such that every vertex of `x` outside `i` has an
/// out-neighbour in `i`.
pub fn is_kernel(d: &Orientation, x: &[Vertex], i: &[Vertex]) -> bool {
    let independent = i
        .iter()
        .enumerate()
        .all(|(p, &u)| i[p + 1..].iter().all(|&v| !d.adjacent(u, v)));
    independent
        && i.iter().all(|v| x.contains(v))
        && x.iter()
            .all(|v| i.contains(v) || d.out_neighbours(*v).iter().any(|w| i.contains(w)))
}

/// A kernel of the subdigraph induced by `x`, trying subsets in order of
/// size; `None` if there is none.
pub fn find_kernel(d: &Orientation, x: &[Vertex]) -> Option<Vec<Vertex>> {
    let mut x = x.to_vec();
    x.sort_unstable();
    x.dedup();
    let n = x.len();
    for size in 0..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let cand: Vec<Vertex> = idx.iter().map(|&i| x[i]).collect();
            if is_kernel(d, &x, &cand) {
                return Some(cand);
            }
            let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

/// Proper edge colouring of a bipartite graph with `Δ` colours, by
/// alternating-path recolouring. `colour[e]` is indexed like `h.edges()`.
pub fn konig_edge_colouring(h: &Graph) -> Result<Vec<usize>> {
    if h.bipartition().is_none() {
        return Err(invalid("graph is not bipartite"));
    }
    let delta = h.max_degree();
    let n = h.vertex_count();
    // at[v][c] = edge of colour c at v
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; delta]; n];
    let mut colour = vec![usize::MAX; h.edge_count()];
    let other = |e: usize, v: Vertex| {
        let (a, b) = h.edges()[e];
        if a == v {
            b
        } else {
            a
        }
    };
    for (e, &(x, y)) in h.edges().iter().enumerate() {
        let free =
            |at: &Vec<Vec<Option<usize>>>, v: Vertex| (0..delta).find(|&c| at[v][c].is_none()).expect("degree below Δ");
        let alpha = free(&at, x);
        if at[y][alpha].is_some() {
            let beta = free(&at, y);
            // the alpha/beta path from y never reaches x
            let mut path = Vec::new();
            let mut v = y;
            let mut c = alpha;
            while let Some(f) = at[v][c] {
                path.push(f);
                v = other(f, v);
                c = if c == alpha { beta } else { alpha };
            }
            for &f in &path {
                let (a, b) = h.edges()[f];
                at[a][colour[f]] = None;
                at[b][colour[f]] = None;
            }
            for &f in &path {
                let (a, b) = h.edges()[f];
                colour[f] = if colour[f] == alpha { beta } else { alpha };
                at[a][colour[f]] = Some(f);
                at[b][colour[f]] = Some(f);
            }
        }
        colour[e] = alpha;
        at[x][alpha] = Some(e);
        at[y][alpha] = Some(e);
    }
    Ok(colour)
}

#[derive(Clone, Debug)]
pub struct GalvinOrientation {
    pub line: LineGraph,
    /// Colour of each line-graph vertex (source edge).
    pub colour: Vec<usize>,
    pub orientation: Orientation,
    pub delta: usize,
}

/// Orients the line graph of bipartite `h`: between edges sharing an
/// `x`-endpoint from higher colour to lower, between edges sharing a
/// `y`-endpoint from lower colour to higher.
pub fn galvin_orientation(h: &Graph) -> Result<GalvinOrientation> {
    let (x, y) = h.bipartition().ok_or_else(|| invalid("graph is not bipartite"))?;
    galvin_orientation_with(h, &x, &y)
}

pub fn galvin_orientation_with(h: &Graph, x: &[Vertex], y: &[Vertex]) -> Result<GalvinOrientation> {
    let line = line_graph_of_bipartite(h, x, y)?;
    let edge_colour = konig_edge_colouring(h)?;
    // line-graph vertex i is h.edges()[i]
    let colour = edge_colour;
    let mut arcs = Vec::new();
    for &(i, j) in line.graph.edges() {
        let (si, sj) = (line.source[i], line.source[j]);
        let (lo, hi) = if colour[i] < colour[j] { (i, j) } else { (j, i) };
        if si.0 == sj.0 {
            arcs.push((hi, lo));
        } else {
            debug_assert_eq!(si.1, sj.1);
            arcs.push((lo, hi));
        }
    }
    let orientation = Orientation::new(line.graph.vertex_count(), arcs)?;
    Ok(GalvinOrientation {
        delta: h.max_degree(),
        line,
        colour,
        orientation,
    })
}
