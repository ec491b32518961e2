//! The (f, g)-painting game.
//!
//! Each round Lister picks a non-empty set `U` of live vertices and one token
//! is removed from each. Painter answers with an independent `X ⊆ U`; every
//! vertex of `X` receives a colour, lowering its debt by one. A vertex whose
//! debt reaches zero is frozen and may no longer be chosen. Lister wins when
//! some vertex runs out of tokens while still in debt; Painter wins once all
//! debts are zero.

mod exact;
mod kernel;
mod listers;
mod strategies;

pub use exact::{
    kfold_paint_number, kfold_paint_number_with, solve_paintable_exact, solve_paintable_exact_with, verify_strategy,
    ExhaustiveLister, ExhaustivePainter, PaintOptions, PaintSolver, Verification,
};
pub use kernel::{
    find_kernel, galvin_orientation, galvin_orientation_with, is_kernel, konig_edge_colouring, GalvinOrientation,
    Orientation,
};
pub use listers::{parse_vertex_set, HumanLister, HumanPainter, RandomLister, ScriptedLister};
pub use strategies::{
    claim_bound, strategy_cyclic, strategy_fractional, strategy_kernel, CyclicStrategy, FractionalStrategy,
    KernelStrategy,
};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    Painter,
    Lister,
}

/// One round: Lister's set and Painter's answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    #[serde(rename = "U")]
    pub u: Vec<Vertex>,
    #[serde(rename = "X")]
    pub x: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub rounds: Vec<Round>,
    pub winner: Winner,
    /// Set when the loser forfeited by an illegal move.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub protocol_error: Option<String>,
}

impl Transcript {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("transcript serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Re-plays the rounds from the initial tokens and debts, checking every
    /// move and the recorded winner.
    pub fn replay(&self, g: &Graph, f: &[u32], debt: &[u32]) -> Result<GameState> {
        let mut s = GameState::new(g, f, debt)?;
        for r in &self.rounds {
            if s.outcome().is_some() {
                return Err(Error::Protocol("rounds continue after the game ended".into()));
            }
            s.check_lister(&r.u)?;
            s.apply(&r.u, &r.x)?;
        }
        match s.outcome() {
            Some(w) if w == self.winner => Ok(s),
            _ if self.protocol_error.is_some() => Ok(s),
            other => Err(Error::Protocol(format!(
                "replay ends with {other:?}, transcript says {:?}",
                self.winner
            ))),
        }
    }
}

/// Position of a game in progress.
#[derive(Clone, Debug)]
pub struct GameState {
    graph: Graph,
    tokens: Vec<u32>,
    debt: Vec<u32>,
    round: usize,
    transcript: Vec<Round>,
}

impl GameState {
    pub fn new(g: &Graph, f: &[u32], debt: &[u32]) -> Result<Self> {
        let n = g.vertex_count();
        if f.len() != n || debt.len() != n {
            return Err(invalid("token and demand vectors must have one entry per vertex"));
        }
        if let Some(v) = (0..n).find(|&v| f[v] < debt[v]) {
            return Err(invalid(format!("vertex {v} has f = {} < g = {}", f[v], debt[v])));
        }
        Ok(GameState {
            graph: g.clone(),
            tokens: f.to_vec(),
            debt: debt.to_vec(),
            round: 0,
            transcript: Vec::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tokens(&self) -> &[u32] {
        &self.tokens
    }

    pub fn debt(&self) -> &[u32] {
        &self.debt
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn transcript(&self) -> &[Round] {
        &self.transcript
    }

    pub fn is_frozen(&self, v: Vertex) -> bool {
        self.debt[v] == 0
    }

    /// Vertices Lister may still choose.
    pub fn live(&self) -> Vec<Vertex> {
        (0..self.graph.vertex_count())
            .filter(|&v| self.debt[v] > 0 && self.tokens[v] > 0)
            .collect()
    }

    pub fn outcome(&self) -> Option<Winner> {
        if self.debt.iter().all(|&d| d == 0) {
            Some(Winner::Painter)
        } else if (0..self.debt.len()).any(|v| self.debt[v] > 0 && self.tokens[v] == 0) {
            Some(Winner::Lister)
        } else {
            None
        }
    }

    pub fn check_lister(&self, u: &[Vertex]) -> Result<()> {
        if u.is_empty() {
            return Err(Error::Protocol("Lister chose the empty set".into()));
        }
        let mut sorted = u.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != u.len() {
            return Err(Error::Protocol("Lister repeated a vertex".into()));
        }
        for &v in u {
            if v >= self.graph.vertex_count() {
                return Err(Error::Protocol(format!("Lister chose unknown vertex {v}")));
            }
            if self.debt[v] == 0 {
                return Err(Error::Protocol(format!("Lister chose frozen vertex {v}")));
            }
            if self.tokens[v] == 0 {
                return Err(Error::Protocol(format!("Lister chose vertex {v} without tokens")));
            }
        }
        Ok(())
    }

    pub fn check_painter(&self, u: &[Vertex], x: &[Vertex]) -> Result<()> {
        if let Some(v) = x.iter().find(|v| !u.contains(v)) {
            return Err(Error::Protocol(format!("Painter coloured {v}, which is not in U")));
        }
        if !self.graph.is_independent(x) {
            return Err(Error::Protocol("Painter's set is not independent".into()));
        }
        Ok(())
    }

    /// Plays one round after checking both moves.
    pub fn apply(&mut self, u: &[Vertex], x: &[Vertex]) -> Result<()> {
        self.check_lister(u)?;
        self.check_painter(u, x)?;
        for &v in u {
            self.tokens[v] -= 1;
        }
        for &v in x {
            self.debt[v] -= 1;
        }
        let mut u = u.to_vec();
        let mut x = x.to_vec();
        u.sort_unstable();
        x.sort_unstable();
        x.dedup();
        self.transcript.push(Round { u, x });
        self.round += 1;
        Ok(())
    }
}

pub trait PainterStrategy {
    /// An independent subset of `u`.
    fn paint(&mut self, state: &GameState, u: &[Vertex]) -> Result<Vec<Vertex>>;

    /// Everything the strategy remembers that can influence later moves,
    /// or `None` if it cannot be summarised. Used to merge game positions
    /// when checking a strategy against every Lister.
    fn memo_key(&self) -> Option<Vec<u64>> {
        None
    }
}

pub trait ListerStrategy {
    /// A non-empty set of live vertices.
    fn choose(&mut self, state: &GameState) -> Result<Vec<Vertex>>;
}

impl<P: PainterStrategy + ?Sized> PainterStrategy for Box<P> {
    fn paint(&mut self, state: &GameState, u: &[Vertex]) -> Result<Vec<Vertex>> {
        (**self).paint(state, u)
    }

    fn memo_key(&self) -> Option<Vec<u64>> {
        (**self).memo_key()
    }
}

impl<L: ListerStrategy + ?Sized> ListerStrategy for Box<L> {
    fn choose(&mut self, state: &GameState) -> Result<Vec<Vertex>> {
        (**self).choose(state)
    }
}

/// Plays until one side wins. An illegal move forfeits the game for the side
/// that made it; other strategy errors are returned.
pub fn play_game(
    g: &Graph,
    f: &[u32],
    debt: &[u32],
    painter: &mut dyn PainterStrategy,
    lister: &mut dyn ListerStrategy,
    max_rounds: usize,
) -> Result<Transcript> {
    let mut state = GameState::new(g, f, debt)?;
    let finish = |state: &GameState, winner, protocol_error| Transcript {
        rounds: state.transcript.clone(),
        winner,
        protocol_error,
    };
    loop {
        if let Some(w) = state.outcome() {
            return Ok(finish(&state, w, None));
        }
        if state.round >= max_rounds {
            return Err(Error::ResourceLimit(max_rounds));
        }
        let u = match lister.choose(&state) {
            Ok(u) => u,
            Err(Error::Protocol(msg)) => return Ok(finish(&state, Winner::Painter, Some(format!("Lister: {msg}")))),
            Err(e) => return Err(e),
        };
        if let Err(Error::Protocol(msg)) = state.check_lister(&u) {
            return Ok(finish(&state, Winner::Painter, Some(format!("Lister: {msg}"))));
        }
        let x = match painter.paint(&state, &u) {
            Ok(x) => x,
            Err(Error::Protocol(msg)) => return Ok(finish(&state, Winner::Lister, Some(format!("Painter: {msg}")))),
            Err(e) => return Err(e),
        };
        if let Err(Error::Protocol(msg)) = state.check_painter(&u, &x) {
            return Ok(finish(&state, Winner::Lister, Some(format!("Painter: {msg}"))));
        }
        state.apply(&u, &x)?;
    }
}

/// `f ≡ a`, `g ≡ b` on `n` vertices.
pub fn uniform_game(n: usize, a: u32, b: u32) -> (Vec<u32>, Vec<u32>) {
    (vec![a; n], vec![b; n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    struct Greedy;
    impl PainterStrategy for Greedy {
        fn paint(&mut self, state: &GameState, u: &[Vertex]) -> Result<Vec<Vertex>> {
            let mut x: Vec<Vertex> = Vec::new();
            for &v in u {
                if x.iter().all(|&w| !state.graph().has_edge(v, w)) {
                    x.push(v);
                }
            }
            Ok(x)
        }
    }

    struct All;
    impl ListerStrategy for All {
        fn choose(&mut self, state: &GameState) -> Result<Vec<Vertex>> {
            Ok(state.live())
        }
    }

    struct Cheat;
    impl PainterStrategy for Cheat {
        fn paint(&mut self, _: &GameState, u: &[Vertex]) -> Result<Vec<Vertex>> {
            Ok(u.to_vec())
        }
    }

    #[test]
    fn k2_ends_within_token_budget() {
        let g = complete(2);
        let t = play_game(&g, &[2, 2], &[1, 1], &mut Greedy, &mut All, 100).unwrap();
        assert!(t.rounds.len() <= 4);
        assert_eq!(t.winner, Winner::Painter);
        t.replay(&g, &[2, 2], &[1, 1]).unwrap();
    }

    #[test]
    fn illegal_painter_forfeits() {
        let g = complete(2);
        let t = play_game(&g, &[2, 2], &[1, 1], &mut Cheat, &mut All, 100).unwrap();
        assert_eq!(t.winner, Winner::Lister);
        assert!(t.protocol_error.is_some());
    }

    #[test]
    fn transcript_json_shape() {
        let t = Transcript {
            rounds: vec![Round {
                u: vec![0, 1],
                x: vec![1],
            }],
            winner: Winner::Painter,
            protocol_error: None,
        };
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"rounds": [{"U": [0, 1], "X": [1]}], "winner": "painter"})
        );
        assert_eq!(Transcript::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn frozen_vertices_cannot_be_chosen() {
        let g = complete(2);
        let mut s = GameState::new(&g, &[2, 2], &[1, 1]).unwrap();
        s.apply(&[0], &[0]).unwrap();
        assert!(s.is_frozen(0));
        assert!(s.apply(&[0, 1], &[1]).is_err());
        assert_eq!(s.live(), vec![1]);
    }
}
