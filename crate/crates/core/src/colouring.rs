//! Multifold colourings, list assignments and the properness check.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex};

pub type Colour = u32;
pub type ColourSet = BTreeSet<Colour>;

/// A (possibly partial) assignment of colour sets to vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BFoldColouring {
    sets: BTreeMap<Vertex, ColourSet>,
}

impl BFoldColouring {
    pub fn new() -> Self {
        Self::default()
    }

    /// Total colouring from one set per vertex.
    pub fn from_sets<I, S>(sets: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = Colour>,
    {
        BFoldColouring {
            sets: sets
                .into_iter()
                .enumerate()
                .map(|(v, s)| (v, s.into_iter().collect()))
                .collect(),
        }
    }

    pub fn assign(&mut self, v: Vertex, set: impl IntoIterator<Item = Colour>) {
        self.sets.insert(v, set.into_iter().collect());
    }

    pub fn unassign(&mut self, v: Vertex) -> Option<ColourSet> {
        self.sets.remove(&v)
    }

    pub fn get(&self, v: Vertex) -> Option<&ColourSet> {
        self.sets.get(&v)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &ColourSet)> {
        self.sets.iter().map(|(&v, s)| (v, s))
    }

    pub fn is_total(&self, g: &Graph) -> bool {
        (0..g.vertex_count()).all(|v| self.sets.contains_key(&v))
    }

    /// Vertices painted with colour `c`.
    pub fn class_of(&self, c: Colour) -> Vec<Vertex> {
        self.sets
            .iter()
            .filter(|(_, s)| s.contains(&c))
            .map(|(&v, _)| v)
            .collect()
    }

    /// First edge between two coloured vertices whose sets intersect.
    pub fn conflict(&self, g: &Graph) -> Option<(Vertex, Vertex)> {
        g.edges()
            .iter()
            .copied()
            .find(|&(u, v)| match (self.get(u), self.get(v)) {
                (Some(a), Some(b)) => !a.is_disjoint(b),
                _ => false,
            })
    }

    /// Applies a colour renaming to every set.
    pub fn map_colours(&self, f: impl Fn(Colour) -> Colour) -> Self {
        BFoldColouring {
            sets: self
                .sets
                .iter()
                .map(|(&v, s)| (v, s.iter().map(|&c| f(c)).collect()))
                .collect(),
        }
    }
}

/// Per-vertex lists of permissible colours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<ColourSet>,
}

impl ListAssignment {
    pub fn new<I, S>(lists: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = Colour>,
    {
        ListAssignment {
            lists: lists.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    /// Every vertex gets `{0, .., a-1}`.
    pub fn uniform(n: usize, a: usize) -> Self {
        Self::new((0..n).map(|_| 0..a as Colour))
    }

    pub fn list(&self, v: Vertex) -> &ColourSet {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[ColourSet] {
        &self.lists
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    pub fn set_list(&mut self, v: Vertex, list: impl IntoIterator<Item = Colour>) {
        self.lists[v] = list.into_iter().collect();
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(BTreeSet::len).collect()
    }

    /// All colours mentioned by some list.
    pub fn universe(&self) -> ColourSet {
        self.lists.iter().flatten().copied().collect()
    }

    /// Whether `c` is an `(L, fold)`-colouring: total, proper, sizes match
    /// and each set lies inside its list.
    pub fn admits(&self, g: &Graph, c: &BFoldColouring, fold: &[usize]) -> Result<bool> {
        if !is_proper_bfold(g, c, fold)? {
            return Ok(false);
        }
        Ok((0..g.vertex_count()).all(|v| c.get(v).is_some_and(|s| s.is_subset(&self.lists[v]))))
    }
}

/// Constant fold vector.
pub fn uniform_fold(n: usize, b: usize) -> Vec<usize> {
    vec![b; n]
}

/// True iff every vertex has exactly `fold[v]` colours and adjacent sets are
/// disjoint. A vertex without a set is an error rather than `false`.
pub fn is_proper_bfold(g: &Graph, c: &BFoldColouring, fold: &[usize]) -> Result<bool> {
    if fold.len() != g.vertex_count() {
        return Err(invalid(format!(
            "fold vector has {} entries for {} vertices",
            fold.len(),
            g.vertex_count()
        )));
    }
    for (v, &f) in fold.iter().enumerate() {
        match c.get(v) {
            None => return Err(Error::IncompleteColouring(v)),
            Some(s) if s.len() != f => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(c.conflict(g).is_none())
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Serialize, Deserialize)]
struct ListsJson {
    lists: BTreeMap<String, Vec<Colour>>,
}

#[derive(Serialize, Deserialize)]
struct SetsJson {
    sets: BTreeMap<String, Vec<Colour>>,
}

fn resolve_vertex(g: &Graph, key: &str) -> Result<Vertex> {
    let v = match key.parse::<Vertex>() {
        Ok(v) => v,
        Err(_) => g
            .vertex(key)
            .ok_or_else(|| invalid(format!("unknown vertex `{key}`")))?,
    };
    if v >= g.vertex_count() {
        return Err(invalid(format!("vertex {v} out of range")));
    }
    Ok(v)
}

impl ListAssignment {
    pub fn to_json(&self) -> String {
        let lists = self
            .lists
            .iter()
            .enumerate()
            .map(|(v, l)| (v.to_string(), l.iter().copied().collect()))
            .collect();
        serde_json::to_string(&ListsJson { lists }).expect("lists serialize")
    }

    /// Parses `{"lists": {...}}`; keys are vertex ids or graph labels and
    /// every vertex must receive a list.
    pub fn from_json(g: &Graph, s: &str) -> Result<Self> {
        let j: ListsJson = serde_json::from_str(s)?;
        let mut lists = vec![None; g.vertex_count()];
        for (k, l) in j.lists {
            lists[resolve_vertex(g, &k)?] = Some(l);
        }
        let lists = lists
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| invalid(format!("vertex {v} has no list"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(lists))
    }
}

impl BFoldColouring {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("sets serialize")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let sets: BTreeMap<String, Vec<Colour>> = self
            .sets
            .iter()
            .map(|(v, s)| (v.to_string(), s.iter().copied().collect()))
            .collect();
        serde_json::to_value(SetsJson { sets }).expect("sets serialize")
    }

    pub fn from_json(g: &Graph, s: &str) -> Result<Self> {
        let j: SetsJson = serde_json::from_str(s)?;
        let mut c = BFoldColouring::new();
        for (k, set) in j.sets {
            c.assign(resolve_vertex(g, &k)?, set);
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, complete};

    #[test]
    fn c5_five_two_colouring_is_proper() {
        let c5 = build_cycle(5).unwrap();
        let c = BFoldColouring::from_sets([vec![0, 1], vec![2, 3], vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert!(is_proper_bfold(&c5, &c, &uniform_fold(5, 2)).unwrap());
        // wrong fold
        assert!(!is_proper_bfold(&c5, &c, &uniform_fold(5, 1)).unwrap());
    }

    #[test]
    fn shared_colour_on_edge() {
        let k2 = complete(2);
        let c = BFoldColouring::from_sets([[1], [1]]);
        assert!(!is_proper_bfold(&k2, &c, &[1, 1]).unwrap());
    }

    #[test]
    fn missing_vertex_is_an_error() {
        let k2 = complete(2);
        let mut c = BFoldColouring::new();
        c.assign(0, [1]);
        assert!(matches!(
            is_proper_bfold(&k2, &c, &[1, 1]),
            Err(Error::IncompleteColouring(1))
        ));
    }

    #[test]
    fn json_with_labels() {
        let mut labels = BTreeMap::new();
        labels.insert("u".into(), 1);
        let g = complete(2).with_labels(labels).unwrap();
        let l = ListAssignment::from_json(&g, r#"{"lists": {"0": [1, 2], "u": [3]}}"#).unwrap();
        assert_eq!(l.sizes(), vec![2, 1]);
        assert!(ListAssignment::from_json(&g, r#"{"lists": {"0": [1]}}"#).is_err());
        let back = ListAssignment::from_json(&g, &l.to_json()).unwrap();
        assert_eq!(back, l);
        let c = BFoldColouring::from_json(&g, r#"{"sets": {"u": [4]}}"#).unwrap();
        assert_eq!(c.get(1).unwrap().len(), 1);
    }
}
