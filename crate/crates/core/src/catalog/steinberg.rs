//! The planar counterexample without 4- and 5-cycles that is not
//! 3-colourable, together with a partial 2-fold 6-colouring that extends to
//! the whole graph.
//!
//! Structure as drawn: ten named vertices, twelve outer connections each
//! subdivided by three internal vertices, and four copies of the gadget
//! `G2` glued onto the triangles of named vertices `(d, c, a)`, `(f, c, a)`,
//! `(d', c', a)` and `(f', c', a)`. Inside a copy the attachment vertices
//! play the roles `X`, `Y`, `Z` in that order.

use std::collections::BTreeMap;

use crate::colouring::{BFoldColouring, Colour};
use crate::graph::{Graph, Vertex};

pub const NAMED: [&str; 10] = ["a", "b", "c", "d", "e", "f", "c'", "d'", "e'", "f'"];

/// Direct edges between named vertices.
const DIRECT: [(&str, &str); 12] = [
    ("a", "b"),
    ("c", "b"),
    ("b", "c'"),
    ("c'", "c"),
    ("a", "e"),
    ("d", "e"),
    ("e", "f"),
    ("f", "d"),
    ("a", "e'"),
    ("d'", "e'"),
    ("e'", "f'"),
    ("f'", "d'"),
];

/// Connections drawn as paths with three internal vertices. `a`–`c` and
/// `a`–`c'` each appear twice (a straight and a curved path).
const SUBDIVIDED: [(&str, &str); 12] = [
    ("a", "c"),
    ("a", "d"),
    ("c", "d"),
    ("a", "c'"),
    ("a", "d'"),
    ("c'", "d'"),
    ("a", "f"),
    ("a", "f'"),
    ("c", "f"),
    ("c'", "f'"),
    ("c", "a"),
    ("c'", "a"),
];

const NAMED_COLOURS: [(&str, [Colour; 2]); 10] = [
    ("a", [1, 3]),
    ("b", [5, 6]),
    ("c", [1, 2]),
    ("d", [2, 3]),
    ("e", [4, 5]),
    ("f", [1, 6]),
    ("c'", [3, 4]),
    ("d'", [1, 4]),
    ("e'", [2, 5]),
    ("f'", [3, 6]),
];

/// Internal vertices of one `G2` copy.
pub const G2_INTERNAL: [&str; 39] = [
    "A1", "A2", "A3", "B1", "B2", "B3", "B4", "B5", "B6", "C1", "C2", "C3", "C4", "C5", "C6", "D1", "D2", "D3", "D4",
    "D5", "D6", "E1", "E2", "E3", "E4", "E5", "E6", "F1", "F2", "F3", "G1", "G2", "G3", "H1", "H2", "H3", "H4", "H5",
    "H6",
];

const G2_EDGES: [(&str, &str); 72] = [
    ("A1", "A2"),
    ("A2", "A3"),
    ("A3", "A1"),
    ("B1", "B6"),
    ("B2", "B3"),
    ("B4", "B5"),
    ("A1", "B1"),
    ("B1", "C1"),
    ("C1", "X"),
    ("A2", "B2"),
    ("B2", "C2"),
    ("C2", "X"),
    ("A2", "B3"),
    ("B3", "C3"),
    ("C3", "Y"),
    ("A3", "B4"),
    ("B4", "C4"),
    ("C4", "Y"),
    ("A3", "B5"),
    ("B5", "C5"),
    ("C5", "Z"),
    ("A1", "B6"),
    ("B6", "C6"),
    ("C6", "Z"),
    ("C1", "D1"),
    ("D1", "B1"),
    ("C2", "D2"),
    ("D2", "B2"),
    ("C3", "D3"),
    ("D3", "B3"),
    ("C4", "D4"),
    ("D4", "B4"),
    ("C5", "D5"),
    ("D5", "B5"),
    ("C6", "D6"),
    ("D6", "B6"),
    ("D1", "E1"),
    ("E1", "E6"),
    ("E6", "D6"),
    ("D2", "E2"),
    ("E2", "E3"),
    ("E3", "D3"),
    ("D4", "E4"),
    ("E4", "E5"),
    ("E5", "D5"),
    ("E1", "F1"),
    ("F1", "E6"),
    ("E2", "F2"),
    ("F2", "E3"),
    ("E4", "F3"),
    ("F3", "E5"),
    ("G1", "F1"),
    ("G2", "F2"),
    ("G3", "F3"),
    ("C1", "H1"),
    ("H1", "X"),
    ("C2", "H2"),
    ("H2", "X"),
    ("C3", "H3"),
    ("H3", "Y"),
    ("C4", "H4"),
    ("H4", "Y"),
    ("C5", "H5"),
    ("H5", "Z"),
    ("C6", "H6"),
    ("H6", "Z"),
    ("H1", "G1"),
    ("G1", "H6"),
    ("H2", "G2"),
    ("G2", "H3"),
    ("H4", "G3"),
    ("G3", "H5"),
];

/// Colour pairs printed for the copy attached to `(d, c, a)`.
const COPY_D: [[Colour; 2]; 39] = [
    [2, 4],
    [1, 3],
    [5, 6], // A
    [1, 3],
    [4, 6],
    [2, 5],
    [2, 4],
    [1, 3],
    [5, 6], // B
    [4, 5],
    [1, 5],
    [3, 4],
    [3, 5],
    [5, 6],
    [2, 4], // C
    [2, 6],
    [2, 3],
    [1, 6],
    [1, 6],
    [2, 4],
    [1, 3], // D
    [3, 5],
    [5, 6],
    [2, 3],
    [2, 3],
    [1, 6],
    [2, 6], // E
    [1, 4],
    [1, 4],
    [4, 5], // F
    [2, 3],
    [2, 3],
    [1, 3], // G
    [1, 6],
    [4, 6],
    [5, 6],
    [4, 6],
    [2, 4],
    [5, 6], // H
];

/// Colour pairs printed for the copy attached to `(f, c, a)`. The printed
/// pairs for `D2` ({1,2}) and `E2` ({1,6}) clash on the edge `D2`–`E2`.
/// Dropping `E2`, `F2`, `G2` is the smallest repair that still extends, so
/// those three are left out of the precolouring (see `UNPRINTED_F`).
const COPY_F: [[Colour; 2]; 39] = [
    [2, 4],
    [1, 3],
    [5, 6], // A
    [1, 3],
    [4, 6],
    [2, 5],
    [2, 4],
    [1, 3],
    [5, 6], // B
    [4, 5],
    [3, 5],
    [3, 6],
    [3, 5],
    [5, 6],
    [2, 4], // C
    [2, 6],
    [1, 2],
    [1, 4],
    [1, 6],
    [2, 4],
    [1, 3], // D
    [1, 4],
    [1, 6],
    [2, 3],
    [2, 3],
    [1, 6],
    [2, 6], // E
    [3, 5],
    [4, 5],
    [4, 5], // F
    [1, 4],
    [1, 3],
    [1, 3], // G
    [2, 3],
    [2, 4],
    [4, 5],
    [4, 6],
    [2, 4],
    [5, 6], // H
];

/// Vertices of the `f` copies whose printed pair is dropped.
const UNPRINTED_F: [&str; 3] = ["E2", "F2", "G2"];

/// Colour renaming carrying the left half onto the right half:
/// `(1 3)(2 4)` maps `c, d, f, e` to `c', d', f', e'` and fixes `a`, `b`.
pub fn mirror_colour(c: Colour) -> Colour {
    match c {
        1 => 3,
        3 => 1,
        2 => 4,
        4 => 2,
        other => other,
    }
}

pub fn g2_edges() -> impl Iterator<Item = (&'static str, &'static str)> {
    G2_EDGES.into_iter()
}

/// `(X, Y, Z, printed colours, mirrored)`.
type G2Copy = (
    &'static str,
    &'static str,
    &'static str,
    &'static [[Colour; 2]; 39],
    bool,
);

/// One entry per `G2` copy.
fn copies() -> [G2Copy; 4] {
    [
        ("d", "c", "a", &COPY_D, false),
        ("f", "c", "a", &COPY_F, false),
        ("d'", "c'", "a", &COPY_D, true),
        ("f'", "c'", "a", &COPY_F, true),
    ]
}

#[derive(Clone, Debug)]
pub struct SteinbergInstance {
    pub graph: Graph,
    pub partial: BFoldColouring,
    /// Internal vertices of the subdivided connections.
    pub path_internals: Vec<Vertex>,
    /// `G2` vertices whose printed colours conflict and are left uncoloured.
    pub dropped: Vec<Vertex>,
}

pub fn steinberg_instance() -> SteinbergInstance {
    let mut labels: BTreeMap<String, Vertex> = BTreeMap::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut partial = BFoldColouring::new();
    let add = |labels: &mut BTreeMap<String, Vertex>, name: String| -> Vertex {
        let id = labels.len();
        labels.insert(name, id);
        id
    };
    for name in NAMED {
        add(&mut labels, name.to_string());
    }
    for (name, pair) in NAMED_COLOURS {
        partial.assign(labels[name], pair);
    }
    for (p, q) in DIRECT {
        edges.push((labels[p], labels[q]));
    }
    let mut path_internals = Vec::new();
    let mut seen: BTreeMap<(String, String), usize> = BTreeMap::new();
    for (p, q) in SUBDIVIDED {
        let key = (p.min(q).to_string(), p.max(q).to_string());
        let copy = seen.entry(key).or_insert(0);
        *copy += 1;
        let mut prev = labels[p];
        for i in 1..=3 {
            let id = add(&mut labels, format!("{p}~{q}#{copy}.{i}"));
            path_internals.push(id);
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, labels[q]));
    }
    let mut dropped = Vec::new();
    for (x, y, z, colours, mirrored) in copies() {
        let prefix = format!("G2[{x}]");
        let mut local: BTreeMap<&str, Vertex> = BTreeMap::new();
        local.insert("X", labels[x]);
        local.insert("Y", labels[y]);
        local.insert("Z", labels[z]);
        for (i, name) in G2_INTERNAL.iter().enumerate() {
            let id = add(&mut labels, format!("{prefix}:{name}"));
            local.insert(name, id);
            if x.starts_with('f') && UNPRINTED_F.contains(name) {
                dropped.push(id);
                continue;
            }
            let pair = colours[i];
            if mirrored {
                partial.assign(id, pair.map(mirror_colour));
            } else {
                partial.assign(id, pair);
            }
        }
        for (p, q) in g2_edges() {
            edges.push((local[p], local[q]));
        }
    }
    let n = labels.len();
    let graph = Graph::new(n, edges)
        .expect("transcribed counterexample is simple")
        .with_labels(labels)
        .expect("labels in range");
    SteinbergInstance {
        graph,
        partial,
        path_internals,
        dropped,
    }
}
