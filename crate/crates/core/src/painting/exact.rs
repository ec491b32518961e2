//! Exact solution of small painting games by memoised minimax.
//!
//! A position is the pair (tokens, debt) over live vertices. Painter only
//! ever answers with a maximal independent subset of `U`: colouring an
//! extra vertex can only help Painter. Some simplifications are applied
//! before a position is looked up:
//!
//! * a vertex with fewer tokens than debt is a win for Lister, who can
//!   keep choosing it alone;
//! * a live vertex without live neighbours and with tokens ≥ debt is
//!   dropped, since every maximal answer containing it paints it;
//! * positions are identified up to automorphisms of the graph.

use std::collections::{HashMap, HashSet};

use super::{GameState, ListerStrategy, PainterStrategy, Round, Transcript, Winner};
use crate::error::{invalid, Error, Result};
use crate::graph::{automorphisms, Graph, Vertex};
use crate::solver::{b_fold_chromatic_number, SearchLimits};

const MAX_VERTICES: usize = 16;
const MAX_COUNT: u32 = 15;
const AUTOMORPHISM_LIMIT: usize = 5040;

#[derive(Clone, Copy, Debug)]
pub struct PaintOptions {
    /// Largest number of memoised positions before giving up.
    pub max_states: usize,
    pub limits: SearchLimits,
    /// Identify positions related by a graph automorphism.
    pub symmetry: bool,
}

impl Default for PaintOptions {
    fn default() -> Self {
        PaintOptions {
            max_states: 20_000_000,
            limits: SearchLimits::none(),
            symmetry: true,
        }
    }
}

/// Memoised minimax for one graph; reusable across games on that graph.
pub struct PaintSolver {
    n: usize,
    adj: Vec<u32>,
    perms: Vec<Vec<usize>>,
    memo: HashMap<u128, bool>,
    mis: HashMap<u32, Vec<u32>>,
    opts: PaintOptions,
    nodes: u64,
}

impl PaintSolver {
    pub fn new(g: &Graph, opts: PaintOptions) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_VERTICES {
            return Err(Error::ResourceLimit(n));
        }
        let adj = (0..n)
            .map(|v| g.neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        let perms = if opts.symmetry {
            automorphisms(g, AUTOMORPHISM_LIMIT).unwrap_or_else(|| vec![(0..n).collect()])
        } else {
            vec![(0..n).collect()]
        };
        Ok(PaintSolver {
            n,
            adj,
            perms,
            memo: HashMap::new(),
            mis: HashMap::new(),
            opts,
            nodes: 0,
        })
    }

    /// Memoised positions so far.
    pub fn states(&self) -> usize {
        self.memo.len()
    }

    fn check_counts(&self, tokens: &[u32], debt: &[u32]) -> Result<()> {
        if tokens.len() != self.n || debt.len() != self.n {
            return Err(invalid("token and demand vectors must have one entry per vertex"));
        }
        if tokens.iter().chain(debt).any(|&c| c > MAX_COUNT) {
            return Err(invalid(format!(
                "exact solver supports at most {MAX_COUNT} tokens per vertex"
            )));
        }
        Ok(())
    }

    /// Whether Lister wins from this position with best play.
    pub fn lister_wins(&mut self, tokens: &[u32], debt: &[u32]) -> Result<bool> {
        self.check_counts(tokens, debt)?;
        let mut t = tokens.to_vec();
        let mut d = debt.to_vec();
        self.search(&mut t, &mut d)
    }

    /// Drops safe isolated vertices; `Some(winner)` if decided outright.
    fn simplify(&self, tokens: &[u32], debt: &mut [u32]) -> Option<Winner> {
        loop {
            let live = self.live_mask(debt);
            if live == 0 {
                return Some(Winner::Painter);
            }
            if (0..self.n).any(|v| live >> v & 1 == 1 && tokens[v] < debt[v]) {
                return Some(Winner::Lister);
            }
            let mut changed = false;
            for (v, d) in debt.iter_mut().enumerate().take(self.n) {
                if live >> v & 1 == 1 && self.adj[v] & live == 0 {
                    *d = 0;
                    changed = true;
                }
            }
            if !changed {
                return None;
            }
        }
    }

    fn live_mask(&self, debt: &[u32]) -> u32 {
        (0..self.n).filter(|&v| debt[v] > 0).fold(0, |m, v| m | 1 << v)
    }

    fn key(&self, tokens: &[u32], debt: &[u32]) -> u128 {
        let byte = |v: usize| -> u128 {
            if debt[v] == 0 {
                0
            } else {
                ((tokens[v] << 4) | debt[v]) as u128
            }
        };
        self.perms
            .iter()
            .map(|p| (0..self.n).fold(0u128, |k, i| k | byte(p[i]) << (8 * i)))
            .min()
            .expect("identity is always present")
    }

    fn maximal_independent(&mut self, u: u32) -> Vec<u32> {
        if let Some(v) = self.mis.get(&u) {
            return v.clone();
        }
        let mut out = Vec::new();
        self.mis_rec(u, 0, u, &mut out);
        self.mis.insert(u, out.clone());
        out
    }

    fn mis_rec(&self, u: u32, chosen: u32, cand: u32, out: &mut Vec<u32>) {
        if cand == 0 {
            let maximal = (0..self.n).all(|v| u >> v & 1 == 0 || chosen >> v & 1 == 1 || self.adj[v] & chosen != 0);
            if maximal {
                out.push(chosen);
            }
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << v);
        self.mis_rec(u, chosen | 1 << v, rest & !self.adj[v], out);
        self.mis_rec(u, chosen, rest, out);
    }

    fn search(&mut self, tokens: &mut [u32], debt: &mut [u32]) -> Result<bool> {
        if let Some(w) = self.simplify(tokens, debt) {
            return Ok(w == Winner::Lister);
        }
        let key = self.key(tokens, debt);
        if let Some(&r) = self.memo.get(&key) {
            return Ok(r);
        }
        if self.memo.len() >= self.opts.max_states {
            return Err(Error::ResourceLimit(self.opts.max_states));
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && self.opts.limits.expired() {
            return Err(Error::Timeout);
        }
        let live = self.live_mask(debt);
        let mut result = false;
        // larger sets first: Lister's strongest moves tend to be broad
        let mut moves: Vec<u32> = subsets_of(live).collect();
        moves.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        for u in moves {
            if self.lister_move_wins(tokens, debt, u)? {
                result = true;
                break;
            }
        }
        self.memo.insert(key, result);
        Ok(result)
    }

    /// Whether every Painter answer to `u` loses.
    fn lister_move_wins(&mut self, tokens: &[u32], debt: &[u32], u: u32) -> Result<bool> {
        for x in self.maximal_independent(u) {
            let mut t = tokens.to_vec();
            let mut d = debt.to_vec();
            for v in 0..self.n {
                if u >> v & 1 == 1 {
                    t[v] -= 1;
                }
                if x >> v & 1 == 1 {
                    d[v] -= 1;
                }
            }
            if !self.search(&mut t, &mut d)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A winning set for Lister in this position, if there is one.
    pub fn winning_move(&mut self, tokens: &[u32], debt: &[u32]) -> Result<Option<Vec<Vertex>>> {
        self.check_counts(tokens, debt)?;
        let mut d = debt.to_vec();
        match self.simplify(tokens, &mut d) {
            Some(Winner::Painter) => return Ok(None),
            Some(Winner::Lister) => {
                // choose a starved vertex alone
                let v = (0..self.n)
                    .find(|&v| debt[v] > 0 && tokens[v] < debt[v])
                    .expect("starved vertex");
                return Ok(Some(vec![v]));
            }
            None => {}
        }
        let live = self.live_mask(&d);
        let mut moves: Vec<u32> = subsets_of(live).collect();
        moves.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        for u in moves {
            if self.lister_move_wins(tokens, &d, u)? {
                return Ok(Some((0..self.n).filter(|&v| u >> v & 1 == 1).collect()));
            }
        }
        Ok(None)
    }

    /// A maximal independent subset of `u` after which Painter still wins,
    /// or any maximal one when every answer loses.
    pub fn best_answer(&mut self, tokens: &[u32], debt: &[u32], u: &[Vertex]) -> Result<Vec<Vertex>> {
        self.check_counts(tokens, debt)?;
        if u.iter().any(|&v| v >= self.n || tokens[v] == 0) {
            return Err(invalid("chosen set must consist of vertices with tokens"));
        }
        let mask = u.iter().fold(0u32, |m, &v| m | 1 << v);
        let answers = self.maximal_independent(mask);
        let n = self.n;
        let to_vec = |x: u32| (0..n).filter(|&v| x >> v & 1 == 1).collect::<Vec<_>>();
        for &x in &answers {
            let mut t = tokens.to_vec();
            let mut d = debt.to_vec();
            for v in 0..self.n {
                if mask >> v & 1 == 1 {
                    t[v] -= 1;
                }
                if x >> v & 1 == 1 {
                    d[v] = d[v].saturating_sub(1);
                }
            }
            if !self.search(&mut t, &mut d)? {
                return Ok(to_vec(x));
            }
        }
        Ok(to_vec(answers[0]))
    }
}

fn subsets_of(mask: u32) -> impl Iterator<Item = u32> {
    let mut sub = mask;
    let mut done = mask == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        sub = (sub.wrapping_sub(1)) & mask;
        if sub == 0 {
            done = true;
        }
        Some(cur)
    })
}

/// Winner of the `(f, g)`-painting game under best play.
pub fn solve_paintable_exact(g: &Graph, f: &[u32], debt: &[u32]) -> Result<Winner> {
    solve_paintable_exact_with(g, f, debt, PaintOptions::default())
}

pub fn solve_paintable_exact_with(g: &Graph, f: &[u32], debt: &[u32], opts: PaintOptions) -> Result<Winner> {
    if f.iter().zip(debt).any(|(a, b)| a < b) {
        return Err(invalid("f must dominate g"));
    }
    let mut s = PaintSolver::new(g, opts)?;
    Ok(if s.lister_wins(f, debt)? {
        Winner::Lister
    } else {
        Winner::Painter
    })
}

/// `χ_{k,P}(g)`: least `a` with Painter winning the `(a, k)` game.
pub fn kfold_paint_number(g: &Graph, k: usize) -> Result<usize> {
    kfold_paint_number_with(g, k, PaintOptions::default())
}

pub fn kfold_paint_number_with(g: &Graph, k: usize, opts: PaintOptions) -> Result<usize> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    let n = g.vertex_count();
    let mut a = b_fold_chromatic_number(g, k)?;
    let mut solver = PaintSolver::new(g, opts)?;
    loop {
        if a as u32 > MAX_COUNT {
            return Err(Error::ResourceLimit(a));
        }
        if !solver.lister_wins(&vec![a as u32; n], &vec![k as u32; n])? {
            return Ok(a);
        }
        a += 1;
    }
}

/// Lister playing optimally with the exact solver; when no winning move
/// exists it chooses every live vertex.
pub struct ExhaustiveLister {
    solver: PaintSolver,
}

impl ExhaustiveLister {
    pub fn new(g: &Graph, opts: PaintOptions) -> Result<Self> {
        Ok(ExhaustiveLister {
            solver: PaintSolver::new(g, opts)?,
        })
    }
}

impl ListerStrategy for ExhaustiveLister {
    fn choose(&mut self, state: &GameState) -> Result<Vec<Vertex>> {
        match self.solver.winning_move(state.tokens(), state.debt())? {
            Some(u) => Ok(u),
            None => Ok(state.live()),
        }
    }
}

/// Painter playing optimally with the exact solver.
pub struct ExhaustivePainter {
    solver: PaintSolver,
}

impl ExhaustivePainter {
    pub fn new(g: &Graph, opts: PaintOptions) -> Result<Self> {
        Ok(ExhaustivePainter {
            solver: PaintSolver::new(g, opts)?,
        })
    }
}

impl PainterStrategy for ExhaustivePainter {
    fn paint(&mut self, state: &GameState, u: &[Vertex]) -> Result<Vec<Vertex>> {
        self.solver.best_answer(state.tokens(), state.debt(), u)
    }
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub painter_always_wins: bool,
    /// A game Painter loses, if any.
    pub counterexample: Option<Transcript>,
    /// Distinct positions visited.
    pub positions: usize,
}

/// Plays `painter` against every possible Lister. Positions are merged
/// using the strategy's `memo_key`, which must be available.
pub fn verify_strategy<P>(g: &Graph, f: &[u32], debt: &[u32], painter: &P, max_states: usize) -> Result<Verification>
where
    P: PainterStrategy + Clone,
{
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit(n));
    }
    if f.iter().chain(debt).any(|&c| c > MAX_COUNT) {
        return Err(invalid(format!(
            "verification supports at most {MAX_COUNT} tokens per vertex"
        )));
    }
    let mut v = Verifier {
        n,
        seen: HashSet::new(),
        max_states,
        path: Vec::new(),
        scratch: GameState::new(g, f, debt)?,
    };
    let counterexample = v.explore(painter)?;
    Ok(Verification {
        painter_always_wins: counterexample.is_none(),
        counterexample,
        positions: v.seen.len(),
    })
}

struct Verifier {
    n: usize,
    seen: HashSet<(u128, Vec<u64>)>,
    max_states: usize,
    path: Vec<Round>,
    scratch: GameState,
}

impl Verifier {
    fn pack(&self) -> u128 {
        let s = &self.scratch;
        (0..self.n).fold(0u128, |k, v| k | (((s.tokens[v] << 4) | s.debt[v]) as u128) << (8 * v))
    }

    fn lost(&self, reason: Option<String>) -> Transcript {
        Transcript {
            rounds: self.path.clone(),
            winner: Winner::Lister,
            protocol_error: reason,
        }
    }

    fn explore<P: PainterStrategy + Clone>(&mut self, painter: &P) -> Result<Option<Transcript>> {
        match self.scratch.outcome() {
            Some(Winner::Lister) => return Ok(Some(self.lost(None))),
            Some(Winner::Painter) => return Ok(None),
            None => {}
        }
        let key = painter
            .memo_key()
            .ok_or_else(|| invalid("strategy does not expose its memory"))?;
        if !self.seen.insert((self.pack(), key)) {
            return Ok(None);
        }
        if self.seen.len() > self.max_states {
            return Err(Error::ResourceLimit(self.max_states));
        }
        let live = self.scratch.live().iter().fold(0u32, |m, &v| m | 1 << v);
        for u in subsets_of(live) {
            let u: Vec<Vertex> = (0..self.n).filter(|&v| u >> v & 1 == 1).collect();
            let mut p = painter.clone();
            let x = match p.paint(&self.scratch, &u) {
                Ok(x) => x,
                Err(Error::Protocol(msg)) => {
                    self.path.push(Round { u, x: Vec::new() });
                    return Ok(Some(self.lost(Some(msg))));
                }
                Err(e) => return Err(e),
            };
            if let Err(Error::Protocol(msg)) = self.scratch.check_painter(&u, &x) {
                self.path.push(Round { u, x });
                return Ok(Some(self.lost(Some(msg))));
            }
            let (tokens, debt) = (self.scratch.tokens.clone(), self.scratch.debt.clone());
            self.scratch.apply(&u, &x)?;
            let rounds = self.path.len();
            self.path.push(self.scratch.transcript.pop().expect("round recorded"));
            let found = self.explore(&p)?;
            if found.is_some() {
                return Ok(found);
            }
            self.path.truncate(rounds);
            self.scratch.tokens = tokens;
            self.scratch.debt = debt;
            self.scratch.round -= 1;
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, complete};
    use crate::painting::{play_game, uniform_game, RandomLister};

    #[test]
    fn optimal_players_agree_with_solver() {
        let c5 = build_cycle(5).unwrap();
        for (a, want) in [(2, Winner::Lister), (3, Winner::Painter)] {
            let (f, g) = uniform_game(5, a, 1);
            let mut p = ExhaustivePainter::new(&c5, PaintOptions::default()).unwrap();
            let mut l = ExhaustiveLister::new(&c5, PaintOptions::default()).unwrap();
            let t = play_game(&c5, &f, &g, &mut p, &mut l, 100).unwrap();
            assert_eq!(t.winner, want);
            t.replay(&c5, &f, &g).unwrap();
        }
        let (f, g) = uniform_game(5, 5, 2);
        let mut p = ExhaustivePainter::new(&c5, PaintOptions::default()).unwrap();
        for seed in 0..50 {
            let t = play_game(&c5, &f, &g, &mut p, &mut RandomLister::new(seed), 100).unwrap();
            assert_eq!(t.winner, Winner::Painter);
        }
    }

    fn wins(g: &Graph, a: u32, b: u32) -> Winner {
        let n = g.vertex_count();
        solve_paintable_exact(g, &vec![a; n], &vec![b; n]).unwrap()
    }

    #[test]
    fn small_games() {
        assert_eq!(wins(&complete(2), 2, 1), Winner::Painter);
        assert_eq!(wins(&complete(2), 1, 1), Winner::Lister);
        let c5 = build_cycle(5).unwrap();
        assert_eq!(wins(&c5, 2, 1), Winner::Lister);
        assert_eq!(wins(&c5, 3, 1), Winner::Painter);
        assert_eq!(wins(&complete(3), 3, 1), Winner::Painter);
    }

    #[test]
    fn paint_numbers() {
        assert_eq!(kfold_paint_number(&build_cycle(5).unwrap(), 1).unwrap(), 3);
        assert_eq!(kfold_paint_number(&complete(3), 1).unwrap(), 3);
    }

    #[test]
    fn symmetry_folding_does_not_change_answers() {
        let c5 = build_cycle(5).unwrap();
        for (a, b) in [(2, 1), (3, 1), (4, 2)] {
            let plain = PaintOptions {
                symmetry: false,
                ..PaintOptions::default()
            };
            let folded = solve_paintable_exact(&c5, &[a; 5], &[b; 5]).unwrap();
            assert_eq!(
                solve_paintable_exact_with(&c5, &[a; 5], &[b; 5], plain).unwrap(),
                folded
            );
        }
    }

    #[test]
    fn state_cap_is_reported() {
        let c5 = build_cycle(5).unwrap();
        let tiny = PaintOptions {
            max_states: 3,
            ..PaintOptions::default()
        };
        assert!(matches!(
            solve_paintable_exact_with(&c5, &[3; 5], &[1; 5], tiny),
            Err(Error::ResourceLimit(3))
        ));
    }

    #[test]
    fn subsets_enumerated_once() {
        assert_eq!(subsets_of(0b1011).count(), 7);
        assert_eq!(subsets_of(0).count(), 0);
    }
}
