//! Exact b-fold and list colouring by backtracking.
//!
//! All searches run on a dense colour index (at most 128 distinct colours
//! per call) with forward checking: after each assignment the available
//! sets of uncoloured neighbours shrink, and a neighbour left with fewer
//! than its fold in colours fails the branch immediately. The next vertex
//! is always the one with the least slack `|avail| - fold`.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::colouring::{is_proper_bfold, uniform_fold, BFoldColouring, Colour, ListAssignment};
use crate::error::{invalid, Error, Result};
use crate::graph::{clique_number, independence_number, Graph, Vertex};
use crate::rational::Rational;

const MAX_PALETTE: usize = 128;
/// Smallest number of uncoloured vertices worth a component check.
const SPLIT_MIN: usize = 8;

/// Bounds on a single search call.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchLimits {
    pub deadline: Option<Instant>,
}

impl SearchLimits {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn until(deadline: Instant) -> Self {
        SearchLimits {
            deadline: Some(deadline),
        }
    }

    pub(crate) fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

#[derive(Clone)]
struct Engine<'g> {
    g: &'g Graph,
    fold: Vec<usize>,
    palette: Vec<Colour>,
    avail: Vec<u128>,
    set: Vec<u128>,
    done: Vec<bool>,
    remaining: usize,
    // Canonical colour introduction: valid only when every list is the full
    // palette and nothing is precoloured, so unused colours are
    // interchangeable.
    canonical: bool,
    used: u128,
    limits: SearchLimits,
    nodes: u64,
}

impl<'g> Engine<'g> {
    fn new(g: &'g Graph, lists: &[Vec<Colour>], fold: &[usize], limits: SearchLimits) -> Result<Self> {
        let mut palette: Vec<Colour> = lists.iter().flatten().copied().collect();
        palette.sort_unstable();
        palette.dedup();
        if palette.len() > MAX_PALETTE {
            return Err(invalid(format!(
                "{} distinct colours exceed the solver limit of {MAX_PALETTE}",
                palette.len()
            )));
        }
        let index: BTreeMap<Colour, usize> = palette.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let avail: Vec<u128> = lists
            .iter()
            .map(|l| l.iter().fold(0u128, |m, c| m | 1 << index[c]))
            .collect();
        let n = g.vertex_count();
        let done: Vec<bool> = (0..n).map(|v| fold[v] == 0).collect();
        Ok(Engine {
            g,
            fold: fold.to_vec(),
            palette,
            avail,
            set: vec![0; n],
            remaining: done.iter().filter(|d| !**d).count(),
            done,
            canonical: false,
            used: 0,
            limits,
            nodes: 0,
        })
    }

    /// Lists given directly as masks over colours `0..128`.
    fn from_masks(g: &'g Graph, masks: &[u128], fold: &[usize], limits: SearchLimits) -> Self {
        let n = g.vertex_count();
        let done: Vec<bool> = (0..n).map(|v| fold[v] == 0).collect();
        Engine {
            g,
            fold: fold.to_vec(),
            palette: (0..MAX_PALETTE as Colour).collect(),
            avail: masks.to_vec(),
            set: vec![0; n],
            remaining: done.iter().filter(|d| !**d).count(),
            done,
            canonical: false,
            used: 0,
            limits,
            nodes: 0,
        }
    }

    /// Most-constrained-first, lowest colours first, no backtracking.
    fn greedy(&mut self) -> bool {
        while let Some(v) = self.pick() {
            let a = self.avail[v];
            if (a.count_ones() as usize) < self.fold[v] {
                return false;
            }
            let mut s = 0u128;
            let mut bits = a;
            for _ in 0..self.fold[v] {
                let low = bits & bits.wrapping_neg();
                s |= low;
                bits &= !low;
            }
            if !self.fix(v, s) {
                return false;
            }
        }
        true
    }

    /// Commits a fixed set (precolouring); false if it empties a neighbour.
    fn fix(&mut self, v: Vertex, mask: u128) -> bool {
        self.done[v] = true;
        self.remaining -= 1;
        self.set[v] = mask;
        let mut ok = true;
        for &w in self.g.neighbours(v) {
            if !self.done[w] {
                self.avail[w] &= !mask;
                ok &= (self.avail[w].count_ones() as usize) >= self.fold[w];
            }
        }
        ok
    }

    fn pick(&self) -> Option<Vertex> {
        (0..self.g.vertex_count()).filter(|&v| !self.done[v]).min_by_key(|&v| {
            let slack = self.avail[v].count_ones() as i64 - self.fold[v] as i64;
            (slack, std::cmp::Reverse(self.g.degree(v)), v)
        })
    }

    fn candidates(&self, v: Vertex) -> Vec<u128> {
        let b = self.fold[v];
        if !self.canonical {
            return combinations(self.avail[v], b);
        }
        let used_count = self.used.count_ones() as usize;
        let mut out = Vec::new();
        for fresh in 0..=b {
            if used_count + fresh > self.palette.len() {
                break;
            }
            let fresh_mask: u128 = (used_count..used_count + fresh).fold(0, |m, i| m | 1 << i);
            if self.avail[v] & fresh_mask != fresh_mask {
                continue;
            }
            for part in combinations(self.avail[v] & self.used, b - fresh) {
                out.push(part | fresh_mask);
            }
        }
        out
    }

    fn search(&mut self) -> Result<bool> {
        let scope: Vec<Vertex> = (0..self.g.vertex_count()).filter(|&v| !self.done[v]).collect();
        self.search_in(&scope)
    }

    /// Uncoloured vertices of `live` grouped into connected components.
    fn components(&self, live: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.g.vertex_count()];
        let mut out = Vec::new();
        for &s in live {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in self.g.neighbours(comp[i]) {
                    if !self.done[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            out.push(comp);
        }
        out
    }

    /// Colours the uncoloured vertices of `scope`, which no uncoloured
    /// vertex outside it touches. Independent parts are solved one at a
    /// time, so a failure in one part is never retried against choices
    /// made in another.
    fn search_in(&mut self, scope: &[Vertex]) -> Result<bool> {
        let live: Vec<Vertex> = scope.iter().copied().filter(|&v| !self.done[v]).collect();
        if live.is_empty() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.limits.expired() {
            return Err(Error::Timeout);
        }
        if live.len() >= SPLIT_MIN {
            let mut comps = self.components(&live);
            if comps.len() > 1 {
                comps.sort_by_key(Vec::len);
                let snapshot = (
                    self.avail.clone(),
                    self.set.clone(),
                    self.done.clone(),
                    self.remaining,
                    self.used,
                );
                for comp in comps {
                    if !self.search_in(&comp)? {
                        (self.avail, self.set, self.done, self.remaining, self.used) = snapshot;
                        return Ok(false);
                    }
                }
                return Ok(true);
            }
        }
        let v = live
            .iter()
            .copied()
            .min_by_key(|&v| {
                let slack = self.avail[v].count_ones() as i64 - self.fold[v] as i64;
                (slack, std::cmp::Reverse(self.g.degree(v)), v)
            })
            .expect("live is non-empty");
        if (self.avail[v].count_ones() as usize) < self.fold[v] {
            return Ok(false);
        }
        let mut trail: Vec<(Vertex, u128)> = Vec::new();
        for s in self.candidates(v) {
            self.done[v] = true;
            self.remaining -= 1;
            self.set[v] = s;
            let old_used = self.used;
            self.used |= s;
            let mut ok = true;
            for &w in self.g.neighbours(v) {
                if !self.done[w] && self.avail[w] & s != 0 {
                    trail.push((w, self.avail[w]));
                    self.avail[w] &= !s;
                    if (self.avail[w].count_ones() as usize) < self.fold[w] {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && self.search_in(&live)? {
                return Ok(true);
            }
            for (w, a) in trail.drain(..).rev() {
                self.avail[w] = a;
            }
            self.used = old_used;
            self.set[v] = 0;
            self.done[v] = false;
            self.remaining += 1;
        }
        Ok(false)
    }

    fn colouring(&self) -> BFoldColouring {
        let mut c = BFoldColouring::new();
        for v in 0..self.g.vertex_count() {
            let s = self.set[v];
            c.assign(
                v,
                (0..self.palette.len())
                    .filter(|i| s >> i & 1 == 1)
                    .map(|i| self.palette[i]),
            );
        }
        c
    }
}

/// All `k`-subsets of the bits of `mask`, in lexicographic order of bit
/// positions.
fn combinations(mask: u128, k: usize) -> Vec<u128> {
    let bits: Vec<u32> = (0..128).filter(|i| mask >> i & 1 == 1).collect();
    let n = bits.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u128, |m, &i| m | 1 << bits[i]));
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn check_lists(g: &Graph, l: &ListAssignment, fold: &[usize]) -> Result<Vec<Vec<Colour>>> {
    if l.vertex_count() != g.vertex_count() || fold.len() != g.vertex_count() {
        return Err(invalid("list assignment or fold does not match the graph"));
    }
    (0..g.vertex_count())
        .map(|v| {
            let list = l.list(v);
            if list.len() < fold[v] {
                Err(invalid(format!(
                    "vertex {v} has a list of {} colours but needs {}",
                    list.len(),
                    fold[v]
                )))
            } else {
                Ok(list.iter().copied().collect())
            }
        })
        .collect()
}

/// Exact search for an `(L, fold)`-colouring.
pub fn solve_list_colouring(g: &Graph, l: &ListAssignment, fold: &[usize]) -> Result<Option<BFoldColouring>> {
    solve_list_colouring_within(g, l, fold, SearchLimits::none())
}

pub fn solve_list_colouring_within(
    g: &Graph,
    l: &ListAssignment,
    fold: &[usize],
    limits: SearchLimits,
) -> Result<Option<BFoldColouring>> {
    let lists = check_lists(g, l, fold)?;
    let mut e = Engine::new(g, &lists, fold, limits)?;
    Ok(if e.search()? { Some(e.colouring()) } else { None })
}

/// One pass of most-constrained-first greedy list colouring, no
/// backtracking. `None` means only that greedy got stuck.
pub fn greedy_list_colouring(g: &Graph, l: &ListAssignment, fold: &[usize]) -> Result<Option<BFoldColouring>> {
    let lists = check_lists(g, l, fold)?;
    let mut e = Engine::new(g, &lists, fold, SearchLimits::none())?;
    Ok(if e.greedy() { Some(e.colouring()) } else { None })
}

/// Colourability of lists given as masks over `0..128`, trying greedy
/// before the exact search.
pub(crate) fn masks_colourable(g: &Graph, masks: &[u128], fold: &[usize], limits: SearchLimits) -> Result<bool> {
    let mut e = Engine::from_masks(g, masks, fold, limits);
    if e.clone().greedy() {
        return Ok(true);
    }
    e.search()
}

/// A proper b-fold colouring from colours `0..a`, or `None`.
pub fn solve_ab_colouring(g: &Graph, a: usize, b: usize) -> Result<Option<BFoldColouring>> {
    solve_ab_colouring_within(g, a, b, SearchLimits::none())
}

pub fn solve_ab_colouring_within(
    g: &Graph,
    a: usize,
    b: usize,
    limits: SearchLimits,
) -> Result<Option<BFoldColouring>> {
    if b == 0 || a < b {
        return Err(invalid(format!("need a >= b >= 1, got ({a}, {b})")));
    }
    if a > MAX_PALETTE {
        return Err(invalid(format!("palette of {a} colours exceeds {MAX_PALETTE}")));
    }
    let n = g.vertex_count();
    let lists: Vec<Vec<Colour>> = (0..n).map(|_| (0..a as Colour).collect()).collect();
    let fold = uniform_fold(n, b);
    let mut e = Engine::new(g, &lists, &fold, limits)?;
    // Keep dense indices equal to colour ids so canonical prefixes line up.
    e.palette = (0..a as Colour).collect();
    e.avail = vec![if a == 128 { u128::MAX } else { (1u128 << a) - 1 }; n];
    e.canonical = true;
    Ok(if e.search()? { Some(e.colouring()) } else { None })
}

/// `chi_b(g)`: least `a` with an `(a, b)`-colouring.
pub fn b_fold_chromatic_number(g: &Graph, b: usize) -> Result<usize> {
    if b == 0 {
        return Err(invalid("b must be positive"));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let mut a = chromatic_lower_bound(g, b);
    loop {
        if solve_ab_colouring(g, a, b)?.is_some() {
            return Ok(a);
        }
        a += 1;
    }
}

/// `max(b * omega, ceil(b * n / alpha))`, both valid lower bounds on
/// `chi_b`.
fn chromatic_lower_bound(g: &Graph, b: usize) -> usize {
    let n = g.vertex_count();
    let omega = clique_number(g).0;
    let alpha = independence_number(g).0.max(1);
    (b * omega).max((b * n).div_ceil(alpha)).max(b)
}

/// Bracket on the fractional chromatic number from `b <= b_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalSweep {
    /// `min_b chi_b / b` over the sweep.
    pub best: Rational,
    /// `max(n / alpha, omega)`.
    pub lower_bound: Rational,
    pub exact: bool,
    /// `(b, chi_b)` for each `b` swept.
    pub ladder: Vec<(usize, usize)>,
}

pub fn fractional_chromatic_sweep(g: &Graph, b_max: usize) -> Result<FractionalSweep> {
    if b_max == 0 {
        return Err(invalid("b_max must be positive"));
    }
    let n = g.vertex_count() as i64;
    if n == 0 {
        let zero = Rational::from_integer(0);
        return Ok(FractionalSweep {
            best: zero,
            lower_bound: zero,
            exact: true,
            ladder: Vec::new(),
        });
    }
    let alpha = independence_number(g).0 as i64;
    let omega = clique_number(g).0 as i64;
    let lower_bound = Rational::new(n, alpha).max(Rational::from_integer(omega));
    let mut ladder = Vec::new();
    let mut best: Option<Rational> = None;
    for b in 1..=b_max {
        let chi = b_fold_chromatic_number(g, b)?;
        ladder.push((b, chi));
        let r = Rational::new(chi as i64, b as i64);
        best = Some(best.map_or(r, |x| x.min(r)));
    }
    let best = best.expect("b_max >= 1");
    Ok(FractionalSweep {
        best,
        lower_bound,
        exact: best == lower_bound,
        ladder,
    })
}

/// Completes `partial` to a `fold`-fold colouring from `universe`, keeping
/// every coloured vertex fixed.
pub fn extend_partial_colouring(
    g: &Graph,
    partial: &BFoldColouring,
    universe: &[Colour],
    fold: usize,
) -> Result<Option<BFoldColouring>> {
    extend_partial_colouring_within(g, partial, universe, fold, SearchLimits::none())
}

pub fn extend_partial_colouring_within(
    g: &Graph,
    partial: &BFoldColouring,
    universe: &[Colour],
    fold: usize,
    limits: SearchLimits,
) -> Result<Option<BFoldColouring>> {
    for (v, s) in partial.iter() {
        if v >= g.vertex_count() {
            return Err(invalid(format!("partial colouring names missing vertex {v}")));
        }
        if s.len() != fold {
            return Err(invalid(format!("vertex {v} has {} colours, expected {fold}", s.len())));
        }
    }
    if let Some((u, v)) = partial.conflict(g) {
        return Err(Error::ImproperPartial(u, v));
    }
    let lists = ListAssignment::new((0..g.vertex_count()).map(|v| match partial.get(v) {
        Some(s) => s.iter().copied().collect::<Vec<_>>(),
        None => universe.to_vec(),
    }));
    let folds = uniform_fold(g.vertex_count(), fold);
    let found = solve_list_colouring_within(g, &lists, &folds, limits)?;
    if let Some(c) = &found {
        debug_assert!(is_proper_bfold(g, c, &folds)?);
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_gnmk, complete, Graph};

    fn proper(g: &Graph, c: &BFoldColouring, b: usize) -> bool {
        is_proper_bfold(g, c, &uniform_fold(g.vertex_count(), b)).unwrap()
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(0b11111, 2).len(), 10);
        assert_eq!(combinations(0b101, 2), vec![0b101]);
        assert_eq!(combinations(0b101, 0), vec![0]);
        assert!(combinations(0b1, 2).is_empty());
    }

    #[test]
    fn ab_colouring_examples() {
        let c5 = build_cycle(5).unwrap();
        let c = solve_ab_colouring(&c5, 5, 2).unwrap().expect("C5 is (5,2)-colourable");
        assert!(proper(&c5, &c, 2));
        assert!(c.iter().all(|(_, s)| s.iter().all(|&x| x < 5)));
        assert!(solve_ab_colouring(&c5, 2, 1).unwrap().is_none());
        assert!(solve_ab_colouring(&c5, 4, 2).unwrap().is_none());
        assert!(solve_ab_colouring(&complete(4), 7, 2).unwrap().is_none());
        assert!(solve_ab_colouring(&c5, 1, 2).is_err());
    }

    #[test]
    fn b_fold_numbers() {
        let c5 = build_cycle(5).unwrap();
        assert_eq!(b_fold_chromatic_number(&c5, 2).unwrap(), 5);
        assert_eq!(b_fold_chromatic_number(&c5, 1).unwrap(), 3);
        assert_eq!(b_fold_chromatic_number(&complete(4), 1).unwrap(), 4);
    }

    #[test]
    fn sweeps() {
        let c5 = build_cycle(5).unwrap();
        let s = fractional_chromatic_sweep(&c5, 2).unwrap();
        assert_eq!(s.best, Rational::new(5, 2));
        assert_eq!(s.lower_bound, Rational::new(5, 2));
        assert!(s.exact);
        let s = fractional_chromatic_sweep(&complete(4), 1).unwrap();
        assert_eq!((s.best, s.exact), (Rational::from_integer(4), true));
        let k4 = build_gnmk(2, 1, 1).unwrap();
        let s = fractional_chromatic_sweep(&k4.graph, 2).unwrap();
        assert_eq!(s.best, k4.fractional_value());
        assert!(s.exact);
    }

    #[test]
    fn list_colouring_examples() {
        let single = Graph::empty(1);
        let l = ListAssignment::new([[1]]);
        let c = solve_list_colouring(&single, &l, &[1]).unwrap().unwrap();
        assert_eq!(c.get(0).unwrap().iter().copied().collect::<Vec<_>>(), vec![1]);
        assert!(solve_list_colouring(&single, &l, &[2]).is_err());

        // K2 with identical singleton lists has no colouring
        let k2 = complete(2);
        let l = ListAssignment::new([[7], [7]]);
        assert!(solve_list_colouring(&k2, &l, &[1, 1]).unwrap().is_none());
    }

    #[test]
    fn greedy_agrees_when_it_succeeds() {
        let c5 = build_cycle(5).unwrap();
        let l = ListAssignment::uniform(5, 3);
        let c = greedy_list_colouring(&c5, &l, &[1; 5]).unwrap().unwrap();
        assert!(l.admits(&c5, &c, &[1; 5]).unwrap());
    }

    #[test]
    fn extension() {
        let k2 = complete(2);
        let mut p = BFoldColouring::new();
        p.assign(0, [1]);
        p.assign(1, [1]);
        assert!(matches!(
            extend_partial_colouring(&k2, &p, &[1, 2], 1),
            Err(Error::ImproperPartial(0, 1))
        ));

        let c5 = build_cycle(5).unwrap();
        let full = solve_ab_colouring(&c5, 5, 2).unwrap().unwrap();
        let same = extend_partial_colouring(&c5, &full, &[0, 1, 2, 3, 4], 2)
            .unwrap()
            .unwrap();
        assert_eq!(same, full);

        let mut p = BFoldColouring::new();
        p.assign(0, [0, 1]);
        let ext = extend_partial_colouring(&c5, &p, &[0, 1, 2, 3, 4], 2).unwrap().unwrap();
        assert!(proper(&c5, &ext, 2));
        assert_eq!(ext.get(0), p.get(0));
    }

    #[test]
    fn timeout_is_reported() {
        // K_12 from identical 11-lists has a factorial refutation tree.
        let k = complete(12);
        let limits = SearchLimits::until(Instant::now());
        let lists = ListAssignment::uniform(12, 11);
        let r = solve_list_colouring_within(&k, &lists, &[1; 12], limits);
        assert!(matches!(r, Err(Error::Timeout)));
    }
}
