//! Planar gadgets with the list assignments that defeat every `m`-fold
//! colouring once `u` and `v` are coloured.
//!
//! Adjacency is transcribed from the drawn figures using the original
//! vertex names. Colour blocks `A, B, C, ...` map to consecutive disjoint
//! integer ranges starting at 0, in alphabetical order.

use std::collections::BTreeMap;

use crate::colouring::{Colour, ColourSet, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetId {
    /// Planar target graph with 4m + eps lists.
    Fig2,
    /// Planar, no 4-cycle; 3m + eps lists.
    Fig3,
    /// Planar, no 4- or 5-cycle; 3m + eps lists.
    Fig4,
}

impl GadgetId {
    pub const ALL: [GadgetId; 3] = [GadgetId::Fig2, GadgetId::Fig3, GadgetId::Fig4];

    pub fn name(self) -> &'static str {
        match self {
            GadgetId::Fig2 => "fig2",
            GadgetId::Fig3 => "fig3",
            GadgetId::Fig4 => "fig4",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "fig2" => Ok(GadgetId::Fig2),
            "fig3" => Ok(GadgetId::Fig3),
            "fig4" => Ok(GadgetId::Fig4),
            other => Err(Error::UnknownId(other.to_string())),
        }
    }

    /// Divisor `c` in `eps * m = floor((m - 1) / c)`.
    pub fn eps_divisor(self) -> usize {
        match self {
            GadgetId::Fig2 => 3,
            GadgetId::Fig3 => 2,
            GadgetId::Fig4 => 12,
        }
    }

    /// Multiple of `m` in the list size (4 for fig2, 3 otherwise).
    pub fn list_multiple(self) -> usize {
        match self {
            GadgetId::Fig2 => 4,
            _ => 3,
        }
    }

    pub fn vertex_names(self) -> &'static [&'static str] {
        match self {
            GadgetId::Fig2 => FIG2_VERTICES,
            GadgetId::Fig3 => FIG3_VERTICES,
            GadgetId::Fig4 => FIG4_VERTICES,
        }
    }

    pub fn edge_names(self) -> &'static [(&'static str, &'static str)] {
        match self {
            GadgetId::Fig2 => FIG2_EDGES,
            GadgetId::Fig3 => FIG3_EDGES,
            GadgetId::Fig4 => FIG4_EDGES,
        }
    }

    /// Triangles the non-colourability argument relies on.
    pub fn named_cliques(self) -> &'static [&'static [&'static str]] {
        match self {
            GadgetId::Fig2 => &[&["u1", "v1", "x"], &["u2", "v2", "y"]],
            GadgetId::Fig3 => &[&["u1", "v1", "x"], &["u2", "v2", "y"]],
            GadgetId::Fig4 => &[
                &["u1", "v1", "z1"],
                &["u2", "v2", "z2"],
                &["z", "z1", "x"],
                &["z", "z2", "y"],
                &["x1", "x2", "x3"],
                &["y1", "y2", "y3"],
                &["w", "w1", "w2"],
            ],
        }
    }

    /// Vertex degrees read off the drawing, used to validate the edge table.
    pub fn degree_table(self) -> &'static [(&'static str, usize)] {
        match self {
            GadgetId::Fig2 => &[
                ("u", 5),
                ("v", 5),
                ("z", 6),
                ("x", 4),
                ("y", 4),
                ("u1", 4),
                ("v1", 4),
                ("u2", 4),
                ("v2", 4),
            ],
            GadgetId::Fig3 => &[
                ("u", 2),
                ("v", 2),
                ("u1", 3),
                ("u2", 3),
                ("v1", 3),
                ("v2", 3),
                ("x", 3),
                ("y", 3),
            ],
            GadgetId::Fig4 => &[
                ("u", 2),
                ("v", 4),
                ("w", 3),
                ("x", 3),
                ("y", 3),
                ("z", 5),
                ("u1", 3),
                ("u2", 3),
                ("v1", 3),
                ("v2", 3),
                ("w1", 3),
                ("w2", 3),
                ("x1", 3),
                ("x2", 3),
                ("x3", 3),
                ("y1", 3),
                ("y2", 3),
                ("y3", 3),
                ("z1", 4),
                ("z2", 4),
            ],
        }
    }
}

const FIG2_VERTICES: &[&str] = &["u", "v", "x", "y", "z", "u1", "v1", "u2", "v2"];
const FIG2_EDGES: &[(&str, &str)] = &[
    ("u", "x"),
    ("x", "u1"),
    ("u1", "z"),
    ("z", "u2"),
    ("u2", "y"),
    ("y", "u"),
    ("u", "u2"),
    ("v1", "u1"),
    ("u1", "u"),
    ("u", "z"),
    ("z", "v"),
    ("v", "x"),
    ("x", "v1"),
    ("v1", "z"),
    ("v", "v2"),
    ("v2", "u2"),
    ("v1", "v"),
    ("v", "y"),
    ("y", "v2"),
    ("z", "v2"),
];

const FIG3_VERTICES: &[&str] = &["u", "v", "u1", "u2", "v1", "v2", "x", "y"];
const FIG3_EDGES: &[(&str, &str)] = &[
    ("u", "u1"),
    ("u1", "x"),
    ("x", "y"),
    ("y", "u2"),
    ("u2", "u"),
    ("x", "v1"),
    ("v1", "v"),
    ("v", "v2"),
    ("v2", "y"),
    ("u1", "v1"),
    ("u2", "v2"),
];

const FIG4_VERTICES: &[&str] = &[
    "u", "v", "w", "x", "y", "z", "u1", "u2", "v1", "v2", "w1", "w2", "x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2",
];
const FIG4_EDGES: &[(&str, &str)] = &[
    ("u", "u1"),
    ("u1", "z1"),
    ("z1", "z"),
    ("z", "z2"),
    ("z2", "u2"),
    ("u2", "u"),
    ("v1", "v"),
    ("v", "v2"),
    ("v2", "z2"),
    ("z", "x"),
    ("x", "z1"),
    ("z", "y"),
    ("y", "z2"),
    ("x", "x1"),
    ("x1", "x2"),
    ("x2", "x3"),
    ("x3", "x1"),
    ("y", "y1"),
    ("y1", "y2"),
    ("y2", "y3"),
    ("y3", "y1"),
    ("u1", "v1"),
    ("v1", "z1"),
    ("u2", "v2"),
    ("x2", "v"),
    ("v", "y2"),
    ("x3", "w1"),
    ("y3", "w2"),
    ("z", "w"),
    ("w", "w1"),
    ("w1", "w2"),
    ("w2", "w"),
];

/// Which side-list a doubly-listed fig4 vertex takes: `A ∪ D ∪ E` or
/// `B ∪ D ∪ E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Readings of the fig4 list table. `y3` appears in both side groups and
/// `z2` is grouped with the A-side although the argument needs it on the
/// B-side; the default is the reading under which the m = 1 instance is
/// not colourable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fig4Reading {
    pub y3: Side,
    pub z2: Side,
}

impl Default for Fig4Reading {
    fn default() -> Self {
        Fig4Reading {
            y3: Side::B,
            z2: Side::B,
        }
    }
}

/// A gadget instantiated at fold `m`.
#[derive(Clone, Debug)]
pub struct GadgetSpec {
    pub id: GadgetId,
    pub m: usize,
    /// `eps * m = floor((m - 1) / c)`.
    pub eps_m: usize,
    /// Named colour blocks, e.g. `'A' -> [0, .., m-1]`.
    pub blocks: BTreeMap<char, Vec<Colour>>,
    pub graph: Graph,
    pub lists: ListAssignment,
    pub u: Vertex,
    pub v: Vertex,
    reading: Fig4Reading,
}

pub fn gadget(id: GadgetId, m: usize) -> Result<GadgetSpec> {
    gadget_with_reading(id, m, Fig4Reading::default())
}

pub fn gadget_with_reading(id: GadgetId, m: usize, reading: Fig4Reading) -> Result<GadgetSpec> {
    if m == 0 {
        return Err(crate::error::invalid("m must be positive"));
    }
    let eps_m = (m - 1) / id.eps_divisor();
    let sizes: &[(char, usize)] = match id {
        GadgetId::Fig2 => &[('A', m), ('B', m), ('C', m), ('D', m), ('E', eps_m), ('F', 2 * m)],
        GadgetId::Fig3 => &[('A', m), ('B', m), ('C', 2 * m), ('D', m), ('E', eps_m)],
        GadgetId::Fig4 => &[('A', m), ('B', m), ('C', m), ('D', 2 * m), ('E', eps_m)],
    };
    let mut blocks = BTreeMap::new();
    let mut next: Colour = 0;
    for &(name, size) in sizes {
        blocks.insert(name, (next..next + size as Colour).collect::<Vec<_>>());
        next += size as Colour;
    }
    let graph = named_graph(id.vertex_names(), id.edge_names());
    let u = graph.vertex("u").expect("u");
    let v = graph.vertex("v").expect("v");
    let mut spec = GadgetSpec {
        id,
        m,
        eps_m,
        blocks,
        graph,
        lists: ListAssignment::new(Vec::<Vec<Colour>>::new()),
        u,
        v,
        reading,
    };
    let a = spec.blocks[&'A'].clone();
    let b = spec.blocks[&'B'].clone();
    spec.lists = spec.lists_for(&a, &b);
    Ok(spec)
}

pub(crate) fn named_graph(names: &[&str], edges: &[(&str, &str)]) -> Graph {
    let labels: BTreeMap<String, Vertex> = names.iter().enumerate().map(|(i, s)| (s.to_string(), i)).collect();
    let g = Graph::new(names.len(), edges.iter().map(|(a, b)| (labels[*a], labels[*b])))
        .expect("transcribed edge table is simple");
    g.with_labels(labels).expect("labels in range")
}

impl GadgetSpec {
    /// The list template with `A` and `B` replaced by the given sets; other
    /// blocks keep their fixed colours.
    pub fn lists_for(&self, a: &[Colour], b: &[Colour]) -> ListAssignment {
        let block = |c: char| -> Vec<Colour> { self.blocks[&c].clone() };
        let union = |parts: &[&[Colour]]| -> ColourSet { parts.iter().flat_map(|p| p.iter().copied()).collect() };
        let (c, d, e) = (block('C'), block('D'), block('E'));
        let mut out: Vec<ColourSet> = vec![ColourSet::new(); self.graph.vertex_count()];
        let mut put = |name: &str, list: ColourSet| {
            out[self.graph.vertex(name).expect("named vertex")] = list;
        };
        put("u", union(&[a]));
        put("v", union(&[b]));
        match self.id {
            GadgetId::Fig2 => {
                let f = block('F');
                put("x", union(&[a, b, &f, &e]));
                put("y", union(&[a, b, &f, &e]));
                put("u1", union(&[a, &c, &f, &e]));
                put("v1", union(&[b, &c, &f, &e]));
                put("u2", union(&[a, &d, &f, &e]));
                put("v2", union(&[b, &d, &f, &e]));
                put("z", union(&[a, b, &c, &d, &e]));
            }
            GadgetId::Fig3 => {
                for name in ["u1", "u2"] {
                    put(name, union(&[a, &c, &e]));
                }
                for name in ["v1", "v2"] {
                    put(name, union(&[b, &c, &e]));
                }
                for name in ["x", "y"] {
                    put(name, union(&[&c, &d, &e]));
                }
            }
            GadgetId::Fig4 => {
                put("w", union(&[&c, &d, &e]));
                let a_side = union(&[a, &d, &e]);
                let b_side = union(&[b, &d, &e]);
                for name in ["u1", "u2", "w1", "x3", "y1", "z1"] {
                    put(name, a_side.clone());
                }
                for name in ["v1", "v2", "w2", "x1", "x2", "y2"] {
                    put(name, b_side.clone());
                }
                let pick = |s: Side| if s == Side::A { a_side.clone() } else { b_side.clone() };
                put("y3", pick(self.reading.y3));
                put("z2", pick(self.reading.z2));
                for name in ["x", "y", "z"] {
                    put(name, union(&[a, b, &c, &e]));
                }
            }
        }
        ListAssignment::new(out)
    }

    /// One past the largest colour in any fixed block.
    pub fn colour_bound(&self) -> Colour {
        self.blocks.values().flatten().map(|&c| c + 1).max().unwrap_or(0)
    }

    /// Expected list size away from `u` and `v`.
    pub fn list_size(&self) -> usize {
        self.id.list_multiple() * self.m + self.eps_m
    }

    pub fn reading(&self) -> Fig4Reading {
        self.reading
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::has_cycle_of_length;

    #[test]
    fn vertex_counts_and_list_sizes() {
        for (id, n) in [(GadgetId::Fig2, 9), (GadgetId::Fig3, 8), (GadgetId::Fig4, 20)] {
            for m in 1..=3 {
                let g = gadget(id, m).unwrap();
                assert_eq!(g.graph.vertex_count(), n);
                for v in 0..n {
                    let expect = if v == g.u || v == g.v { m } else { g.list_size() };
                    assert_eq!(g.lists.list(v).len(), expect, "{:?} m={m} vertex {v}", id);
                }
            }
        }
        assert_eq!(gadget(GadgetId::Fig2, 1).unwrap().list_size(), 4);
        assert_eq!(gadget(GadgetId::Fig2, 4).unwrap().eps_m, 1);
        assert_eq!(gadget(GadgetId::Fig3, 3).unwrap().eps_m, 1);
        assert_eq!(gadget(GadgetId::Fig4, 13).unwrap().eps_m, 1);
        assert!(gadget(GadgetId::Fig2, 1).unwrap().blocks[&'E'].is_empty());
    }

    #[test]
    fn block_sizes() {
        let g = gadget(GadgetId::Fig2, 2).unwrap();
        let sizes: Vec<usize> = "ABCDEF".chars().map(|c| g.blocks[&c].len()).collect();
        assert_eq!(sizes, vec![2, 2, 2, 2, 0, 4]);
        let g = gadget(GadgetId::Fig3, 2).unwrap();
        let sizes: Vec<usize> = "ABCDE".chars().map(|c| g.blocks[&c].len()).collect();
        assert_eq!(sizes, vec![2, 2, 4, 2, 0]);
        let g = gadget(GadgetId::Fig4, 2).unwrap();
        let sizes: Vec<usize> = "ABCDE".chars().map(|c| g.blocks[&c].len()).collect();
        assert_eq!(sizes, vec![2, 2, 2, 4, 0]);
    }

    #[test]
    fn transcription_matches_degree_tables() {
        for id in GadgetId::ALL {
            let g = gadget(id, 1).unwrap().graph;
            let table = id.degree_table();
            assert_eq!(table.len(), g.vertex_count());
            for &(name, d) in table {
                assert_eq!(g.degree(g.vertex(name).unwrap()), d, "{:?} {name}", id);
            }
            let sum: usize = table.iter().map(|p| p.1).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn named_cliques_present() {
        for id in GadgetId::ALL {
            let g = gadget(id, 1).unwrap().graph;
            for clique in id.named_cliques() {
                let vs: Vec<_> = clique.iter().map(|n| g.vertex(n).unwrap()).collect();
                assert!(g.is_clique(&vs), "{:?} {:?}", id, clique);
            }
        }
    }

    #[test]
    fn short_cycle_exclusions() {
        for m in 1..=2 {
            let f3 = gadget(GadgetId::Fig3, m).unwrap().graph;
            let f4 = gadget(GadgetId::Fig4, m).unwrap().graph;
            assert!(!has_cycle_of_length(&f3, 4).unwrap());
            assert!(!has_cycle_of_length(&f4, 4).unwrap());
            assert!(!has_cycle_of_length(&f4, 5).unwrap());
        }
        // sanity: the exclusions are not vacuous
        let f2 = gadget(GadgetId::Fig2, 1).unwrap().graph;
        assert!(has_cycle_of_length(&f2, 4).unwrap());
    }

    #[test]
    fn u_and_v_not_adjacent() {
        for id in GadgetId::ALL {
            let g = gadget(id, 1).unwrap();
            assert!(!g.graph.has_edge(g.u, g.v));
        }
    }

    fn colourable(s: &GadgetSpec) -> bool {
        let fold = vec![s.m; s.graph.vertex_count()];
        crate::solver::solve_list_colouring(&s.graph, &s.lists, &fold)
            .unwrap()
            .is_some()
    }

    #[test]
    fn gadgets_have_no_list_colouring() {
        for id in GadgetId::ALL {
            for m in 1..=2 {
                assert!(!colourable(&gadget(id, m).unwrap()), "{} at m = {m}", id.name());
            }
        }
    }

    #[test]
    fn fig4_reading_is_the_only_bad_one() {
        for y3 in [Side::A, Side::B] {
            for z2 in [Side::A, Side::B] {
                let reading = Fig4Reading { y3, z2 };
                let s = gadget_with_reading(GadgetId::Fig4, 1, reading).unwrap();
                assert_eq!(colourable(&s), reading != Fig4Reading::default(), "{reading:?}");
            }
        }
    }
}
