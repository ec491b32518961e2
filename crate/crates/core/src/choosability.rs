//! (a, b)-choosability by enumerating list assignments up to colour
//! renaming, k-fold choice numbers, the strong fractional ladder and the
//! gadget amplifier.
//!
//! Lists are assigned to vertices one at a time. Before vertex `i` is
//! listed, colours already in use are grouped by which earlier vertices
//! contain them; colours in one group are interchangeable, as are all
//! unused colours. A list is therefore determined up to renaming by how
//! many colours it takes from each group, and only the lowest-numbered
//! colours of each group are ever chosen. No assignment of `a`-lists to
//! `n` vertices mentions more than `n * a` colours, so that universe loses
//! nothing.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::colouring::{uniform_fold, Colour, ListAssignment};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;
use crate::solver::{b_fold_chromatic_number, masks_colourable, solve_list_colouring, SearchLimits};

const MAX_UNIVERSE: usize = 128;
const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Choosability {
    Choosable,
    /// A bad assignment, colours numbered from 1.
    NotChoosable(ListAssignment),
    Timeout,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ChooseOptions {
    pub limits: SearchLimits,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub threads: usize,
    /// Colour universe; defaults to `n * a`. A smaller cap only decides
    /// choosability for lists drawn from that many colours.
    pub universe: Option<usize>,
}

impl ChooseOptions {
    pub fn within(limits: SearchLimits) -> Self {
        ChooseOptions {
            limits,
            ..Self::default()
        }
    }
}

pub fn is_ab_choosable(g: &Graph, a: usize, b: usize, limits: SearchLimits) -> Result<Choosability> {
    is_ab_choosable_with(g, a, b, &ChooseOptions::within(limits))
}

pub fn is_ab_choosable_with(g: &Graph, a: usize, b: usize, opts: &ChooseOptions) -> Result<Choosability> {
    if b == 0 || a < b {
        return Err(invalid(format!("need a >= b >= 1, got ({a}, {b})")));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Choosability::Choosable);
    }
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit(n));
    }
    let universe = opts.universe.unwrap_or(n * a);
    if universe < a {
        return Err(invalid(format!(
            "universe of {universe} colours cannot hold lists of size {a}"
        )));
    }
    if universe > MAX_UNIVERSE {
        return Err(Error::ResourceLimit(universe));
    }
    let search = Search::new(g, a, b, universe, opts.limits);
    let outcome = search.run(opts.threads.max(1));
    match outcome {
        Outcome::Witness(masks) => {
            let witness = search.to_assignment(&masks);
            // never emit an unchecked certificate
            let fold = uniform_fold(n, b);
            if solve_list_colouring(g, &witness, &fold)?.is_some() {
                return Err(invalid("internal error: witness assignment is colourable"));
            }
            Ok(Choosability::NotChoosable(witness))
        }
        Outcome::Exhausted => Ok(Choosability::Choosable),
        Outcome::Timeout => Ok(Choosability::Timeout),
        Outcome::Failed(e) => Err(e),
    }
}

enum Outcome {
    Witness(Vec<u128>),
    Exhausted,
    Timeout,
    Failed(Error),
}

struct Search<'g> {
    g: &'g Graph,
    a: usize,
    fold: Vec<usize>,
    universe: usize,
    limits: SearchLimits,
    /// `order[i]` is the vertex listed at step `i`.
    order: Vec<Vertex>,
}

/// Lists chosen so far, by step.
#[derive(Clone)]
struct Partial {
    masks: Vec<u128>,
    /// For each colour, the steps whose list contains it.
    sig: Vec<u64>,
    fresh: usize,
}

struct Shared {
    best: AtomicUsize,
    timed_out: AtomicBool,
    failed: Mutex<Option<Error>>,
    found: Mutex<BTreeMap<usize, Vec<u128>>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, a: usize, b: usize, universe: usize, limits: SearchLimits) -> Self {
        Search {
            g,
            a,
            fold: uniform_fold(g.vertex_count(), b),
            universe,
            limits,
            order: listing_order(g),
        }
    }

    /// All lists for the next step, most colours reused first.
    fn choices(&self, p: &Partial) -> Vec<u128> {
        let mut groups: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for c in 0..p.fresh {
            groups.entry(p.sig[c]).or_default().push(c);
        }
        let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
        classes.push((p.fresh..self.universe).take(self.a).collect());
        let mut out = Vec::new();
        let mut counts = vec![0; classes.len()];
        compositions(&classes, 0, self.a, &mut counts, &mut |counts| {
            let mut m = 0u128;
            for (class, &k) in classes.iter().zip(counts) {
                for &c in &class[..k] {
                    m |= 1 << c;
                }
            }
            out.push(m);
        });
        out
    }

    fn push(&self, p: &Partial, step: usize, m: u128) -> Partial {
        let mut q = p.clone();
        q.masks.push(m);
        let mut bits = m;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            q.sig[c] |= 1 << step;
            q.fresh = q.fresh.max(c + 1);
        }
        q
    }

    fn root(&self) -> Partial {
        Partial {
            masks: Vec::new(),
            sig: vec![0; self.universe],
            fresh: 0,
        }
    }

    fn leaf_masks(&self, p: &Partial) -> Vec<u128> {
        let mut masks = vec![0; self.g.vertex_count()];
        for (step, &v) in self.order.iter().enumerate() {
            masks[v] = p.masks[step];
        }
        masks
    }

    fn to_assignment(&self, masks: &[u128]) -> ListAssignment {
        ListAssignment::new(masks.iter().map(|&m| {
            (0..MAX_UNIVERSE)
                .filter(move |&c| m >> c & 1 == 1)
                .map(|c| c as Colour + 1)
        }))
    }

    fn run(&self, threads: usize) -> Outcome {
        let n = self.g.vertex_count();
        let first = self.push(&self.root(), 0, self.choices(&self.root())[0]);
        if n == 1 {
            return match masks_colourable(self.g, &self.leaf_masks(&first), &self.fold, self.limits) {
                Ok(true) => Outcome::Exhausted,
                Ok(false) => Outcome::Witness(self.leaf_masks(&first)),
                Err(Error::Timeout) => Outcome::Timeout,
                Err(e) => Outcome::Failed(e),
            };
        }
        let branches = self.choices(&first);
        let shared = Shared {
            best: AtomicUsize::new(usize::MAX),
            timed_out: AtomicBool::new(false),
            failed: Mutex::new(None),
            found: Mutex::new(BTreeMap::new()),
        };
        let next = AtomicUsize::new(0);
        let work = || loop {
            let j = next.fetch_add(1, Ordering::SeqCst);
            if j >= branches.len() || j > shared.best.load(Ordering::SeqCst) {
                return;
            }
            if shared.timed_out.load(Ordering::SeqCst) || shared.failed.lock().unwrap().is_some() {
                return;
            }
            let p = self.push(&first, 1, branches[j]);
            let mut leaves = 0u64;
            match self.descend(&p, 2, j, &shared, &mut leaves) {
                Ok(Some(masks)) => {
                    shared.found.lock().unwrap().insert(j, masks);
                    shared.best.fetch_min(j, Ordering::SeqCst);
                }
                Ok(None) => {}
                Err(Error::Timeout) => shared.timed_out.store(true, Ordering::SeqCst),
                Err(e) => {
                    shared.failed.lock().unwrap().get_or_insert(e);
                }
            }
        };
        if threads <= 1 {
            work();
        } else {
            std::thread::scope(|s| {
                for _ in 0..threads {
                    s.spawn(work);
                }
            });
        }
        if let Some(e) = shared.failed.into_inner().unwrap() {
            return Outcome::Failed(e);
        }
        if let Some((_, masks)) = shared.found.into_inner().unwrap().into_iter().next() {
            return Outcome::Witness(masks);
        }
        if shared.timed_out.load(Ordering::SeqCst) {
            return Outcome::Timeout;
        }
        Outcome::Exhausted
    }

    /// First bad completion of `p` in enumeration order. Gives up early
    /// (returning `None`) once a lower branch than `branch` has a witness.
    fn descend(
        &self,
        p: &Partial,
        step: usize,
        branch: usize,
        shared: &Shared,
        leaves: &mut u64,
    ) -> Result<Option<Vec<u128>>> {
        if step == self.g.vertex_count() {
            *leaves += 1;
            if (*leaves).is_multiple_of(256) {
                if self.limits.expired() || shared.timed_out.load(Ordering::Relaxed) {
                    return Err(Error::Timeout);
                }
                if shared.best.load(Ordering::Relaxed) < branch {
                    return Ok(None);
                }
            }
            let masks = self.leaf_masks(p);
            return Ok((!masks_colourable(self.g, &masks, &self.fold, self.limits)?).then_some(masks));
        }
        for m in self.choices(p) {
            let q = self.push(p, step, m);
            if let Some(w) = self.descend(&q, step + 1, branch, shared, leaves)? {
                return Ok(Some(w));
            }
            if shared.best.load(Ordering::Relaxed) < branch {
                return Ok(None);
            }
        }
        Ok(None)
    }
}

/// Count vectors over `classes` summing to `left`, earlier classes taking
/// as many colours as possible first.
fn compositions(
    classes: &[Vec<usize>],
    i: usize,
    left: usize,
    counts: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if i == classes.len() {
        if left == 0 {
            emit(counts);
        }
        return;
    }
    let rest: usize = classes[i + 1..].iter().map(Vec::len).sum();
    let hi = left.min(classes[i].len());
    let lo = left.saturating_sub(rest);
    for k in (lo..=hi).rev() {
        counts[i] = k;
        compositions(classes, i + 1, left - k, counts, emit);
    }
    counts[i] = 0;
}

/// Breadth-first from a vertex of maximum degree, so each listed vertex
/// tends to have listed neighbours.
fn listing_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut starts: Vec<Vertex> = (0..n).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut next: Vec<Vertex> = g.neighbours(v).iter().copied().filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
            for w in next {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

/// `ch_k(g)`: least `a` such that `g` is `(a, k)`-choosable, sweeping up
/// from `chi_k(g)`.
pub fn kfold_choice_number(g: &Graph, k: usize, limits: SearchLimits) -> Result<usize> {
    kfold_choice_number_with(g, k, &ChooseOptions::within(limits))
}

pub fn kfold_choice_number_with(g: &Graph, k: usize, opts: &ChooseOptions) -> Result<usize> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    let mut a = b_fold_chromatic_number(g, k)?;
    loop {
        match is_ab_choosable_with(g, a, k, opts)? {
            Choosability::Choosable => return Ok(a),
            Choosability::NotChoosable(_) => a += 1,
            Choosability::Timeout => return Err(Error::Timeout),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rung {
    pub k: usize,
    /// `None` when the computation ran out of time.
    pub ch: Option<usize>,
    pub value: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub rungs: Vec<Rung>,
    /// Largest `(ch_k - 1) / k` found; a lower bound on the strong
    /// fractional choice number.
    pub max: Option<Rational>,
}

/// `(ch_k - 1) / k` for `k = 1..=k_max`, each `k` given `per_k` time.
pub fn strong_ladder(g: &Graph, k_max: usize, per_k: Option<Duration>) -> Result<Ladder> {
    if k_max == 0 {
        return Err(invalid("k_max must be positive"));
    }
    let mut rungs = Vec::new();
    for k in 1..=k_max {
        let limits = match per_k {
            Some(d) => SearchLimits::until(Instant::now() + d),
            None => SearchLimits::none(),
        };
        let ch = match kfold_choice_number(g, k, limits) {
            Ok(ch) => Some(ch),
            Err(Error::Timeout) => None,
            Err(e) => return Err(e),
        };
        let value = ch.map(|c| Rational::new(c as i64 - 1, k as i64));
        rungs.push(Rung { k, ch, value });
    }
    let max = rungs.iter().filter_map(|r| r.value).max();
    Ok(Ladder { rungs, max })
}

/// A composite built from copies of a gadget sharing `u` and `v`.
#[derive(Clone, Debug)]
pub struct Amplified {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub u: Vertex,
    pub v: Vertex,
    /// `(A, B)` for each copy, in copy order.
    pub copies: Vec<(Vec<Colour>, Vec<Colour>)>,
}

const MAX_COMPOSITE: usize = 2_000_000;

/// Glues one copy of `t` per pair `(A, B)` of `m`-subsets of `X` and `Y`,
/// where `X` and `Y` are disjoint sets of `x_size` colours starting at
/// `fresh`. All copies share `u` (list `X`) and `v` (list `Y`); the copy for
/// `(A, B)` takes its other lists from `template(A, B)`.
pub fn amplify_gadget<F>(
    t: &Graph,
    u: Vertex,
    v: Vertex,
    x_size: usize,
    m: usize,
    fresh: Colour,
    template: F,
) -> Result<Amplified>
where
    F: Fn(&[Colour], &[Colour]) -> ListAssignment,
{
    let tn = t.vertex_count();
    if u >= tn || v >= tn || u == v {
        return Err(invalid(
            "designated vertices must be two distinct vertices of the gadget",
        ));
    }
    if t.has_edge(u, v) {
        return Err(invalid("designated vertices u and v are adjacent"));
    }
    if m == 0 || x_size < m {
        return Err(invalid(format!(
            "need x_size >= m >= 1, got x_size = {x_size}, m = {m}"
        )));
    }
    let x: Vec<Colour> = (fresh..fresh + x_size as Colour).collect();
    let y: Vec<Colour> = (fresh + x_size as Colour..fresh + 2 * x_size as Colour).collect();
    let xs = subsets(&x, m);
    let ys = subsets(&y, m);
    let p = xs.len().saturating_mul(ys.len());
    let total = p.saturating_mul(tn - 2).saturating_add(2);
    if total > MAX_COMPOSITE {
        return Err(Error::ResourceLimit(total));
    }
    let others: Vec<Vertex> = (0..tn).filter(|&w| w != u && w != v).collect();
    let mut labels = BTreeMap::new();
    labels.insert(t.label_of(u).unwrap_or("u").to_string(), 0);
    labels.insert(t.label_of(v).unwrap_or("v").to_string(), 1);
    let mut edges = Vec::with_capacity(p * t.edge_count());
    let mut lists: Vec<Vec<Colour>> = vec![x.clone(), y.clone()];
    let mut copies = Vec::with_capacity(p);
    for a in &xs {
        for b in &ys {
            let c = copies.len();
            let base = 2 + c * others.len();
            let map = |w: Vertex| -> Vertex {
                if w == u {
                    0
                } else if w == v {
                    1
                } else {
                    base + others.iter().position(|&o| o == w).expect("vertex of t")
                }
            };
            let local = template(a, b);
            if local.vertex_count() != tn {
                return Err(invalid("template returned lists for the wrong number of vertices"));
            }
            for &w in &others {
                let name = t.label_of(w).map_or_else(|| w.to_string(), str::to_string);
                labels.insert(format!("{name}#{c}"), map(w));
                lists.push(local.list(w).iter().copied().collect());
            }
            edges.extend(t.edges().iter().map(|&(p, q)| (map(p), map(q))));
            copies.push((a.clone(), b.clone()));
        }
    }
    let graph = Graph::new(total, edges)?.with_labels(labels)?;
    Ok(Amplified {
        graph,
        lists: ListAssignment::new(lists),
        u: 0,
        v: 1,
        copies,
    })
}

/// `amplify_gadget` for a catalog gadget with its own list template.
/// `x_size` defaults to the gadget's list size.
pub fn amplify_catalog_gadget(id: crate::catalog::GadgetId, m: usize, x_size: Option<usize>) -> Result<Amplified> {
    let spec = crate::catalog::gadget(id, m)?;
    let x_size = x_size.unwrap_or_else(|| spec.list_size());
    amplify_gadget(&spec.graph, spec.u, spec.v, x_size, m, spec.colour_bound(), |a, b| {
        spec.lists_for(a, b)
    })
}

/// All `k`-subsets of `items`, lexicographic.
fn subsets(items: &[Colour], k: usize) -> Vec<Vec<Colour>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[Colour], k: usize, start: usize, cur: &mut Vec<Colour>, out: &mut Vec<Vec<Colour>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::GadgetId;
    use crate::graph::{build_cycle, complete, complete_bipartite};

    fn decide(g: &Graph, a: usize, b: usize) -> Choosability {
        is_ab_choosable(g, a, b, SearchLimits::none()).unwrap()
    }

    #[test]
    fn small_decisions() {
        assert_eq!(decide(&build_cycle(4).unwrap(), 2, 1), Choosability::Choosable);
        assert!(matches!(
            decide(&complete_bipartite(2, 4), 2, 1),
            Choosability::NotChoosable(_)
        ));
        let Choosability::NotChoosable(w) = decide(&complete(4), 3, 1) else {
            panic!("K4 is not 3-choosable");
        };
        let expected: Vec<Colour> = vec![1, 2, 3];
        for v in 0..4 {
            assert_eq!(w.list(v).iter().copied().collect::<Vec<_>>(), expected);
        }
    }

    #[test]
    fn choice_numbers() {
        let none = SearchLimits::none();
        assert_eq!(kfold_choice_number(&build_cycle(5).unwrap(), 1, none).unwrap(), 3);
        assert_eq!(kfold_choice_number(&build_cycle(4).unwrap(), 1, none).unwrap(), 2);
        assert_eq!(kfold_choice_number(&complete(3), 1, none).unwrap(), 3);
    }

    #[test]
    fn ladders() {
        let l = strong_ladder(&complete(4), 1, None).unwrap();
        assert_eq!(l.rungs[0].ch, Some(4));
        assert_eq!(l.max, Some(Rational::from_integer(3)));
        let l = strong_ladder(&complete(1), 3, None).unwrap();
        let chs: Vec<_> = l.rungs.iter().map(|r| r.ch).collect();
        assert_eq!(chs, vec![Some(1), Some(2), Some(3)]);
        assert_eq!(l.max, Some(Rational::new(2, 3)));
    }

    #[test]
    fn threads_agree() {
        let g = complete_bipartite(2, 4);
        let opts = ChooseOptions {
            threads: 4,
            ..ChooseOptions::default()
        };
        assert_eq!(is_ab_choosable_with(&g, 2, 1, &opts).unwrap(), decide(&g, 2, 1));
    }

    #[test]
    fn expired_budget_reports_timeout() {
        let past = SearchLimits::until(Instant::now() - Duration::from_secs(1));
        let g = complete_bipartite(3, 3);
        assert_eq!(is_ab_choosable(&g, 3, 1, past).unwrap(), Choosability::Timeout);
    }

    #[test]
    fn amplified_sizes() {
        let f3 = amplify_catalog_gadget(GadgetId::Fig3, 1, Some(3)).unwrap();
        assert_eq!(f3.copies.len(), 9);
        assert_eq!(f3.graph.vertex_count(), 56);
        assert!(f3.lists.sizes().iter().all(|&s| s == 3));
        let f2 = amplify_catalog_gadget(GadgetId::Fig2, 1, None).unwrap();
        assert_eq!(f2.copies.len(), 16);
        assert_eq!(f2.graph.vertex_count(), 114);
        assert!(f2.lists.sizes().iter().all(|&s| s == 4));
        let single = amplify_catalog_gadget(GadgetId::Fig3, 1, Some(1)).unwrap();
        assert_eq!(single.copies.len(), 1);
        assert_eq!(single.graph.vertex_count(), 8);
    }

    #[test]
    fn adjacent_designated_vertices_rejected() {
        let k2 = complete(2);
        let r = amplify_gadget(&k2, 0, 1, 2, 1, 0, |_, _| ListAssignment::uniform(2, 2));
        assert!(r.is_err());
    }
}
