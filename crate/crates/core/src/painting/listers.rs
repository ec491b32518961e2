//! Lister adversaries and interactive players.

use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GameState, ListerStrategy, PainterStrategy};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex};

/// Includes each live vertex independently with probability `p`, retrying
/// until the set is non-empty.
#[derive(Clone, Debug)]
pub struct RandomLister {
    rng: ChaCha8Rng,
    p: f64,
}

impl RandomLister {
    pub fn new(seed: u64) -> Self {
        Self::with_density(seed, 0.5)
    }

    pub fn with_density(seed: u64, p: f64) -> Self {
        RandomLister {
            rng: ChaCha8Rng::seed_from_u64(seed),
            p: p.clamp(0.01, 1.0),
        }
    }
}

impl ListerStrategy for RandomLister {
    fn choose(&mut self, state: &GameState) -> Result<Vec<Vertex>> {
        let live = state.live();
        if live.is_empty() {
            return Err(Error::Protocol("no live vertex to choose".into()));
        }
        loop {
            let u: Vec<Vertex> = live.iter().copied().filter(|_| self.rng.gen_bool(self.p)).collect();
            if !u.is_empty() {
                return Ok(u);
            }
        }
    }
}

/// Replays fixed sets, skipping vertices that are no longer live; falls
/// back to all live vertices when the script runs out.
#[derive(Clone, Debug)]
pub struct ScriptedLister {
    script: Vec<Vec<Vertex>>,
    next: usize,
}

impl ScriptedLister {
    pub fn new(script: Vec<Vec<Vertex>>) -> Self {
        ScriptedLister { script, next: 0 }
    }
}

impl ListerStrategy for ScriptedLister {
    fn choose(&mut self, state: &GameState) -> Result<Vec<Vertex>> {
        let live = state.live();
        while self.next < self.script.len() {
            let u: Vec<Vertex> = self.script[self.next]
                .iter()
                .copied()
                .filter(|v| live.contains(v))
                .collect();
            self.next += 1;
            if !u.is_empty() {
                return Ok(u);
            }
        }
        Ok(live)
    }
}

/// Vertex ids or labels separated by spaces or commas.
pub fn parse_vertex_set(g: &Graph, line: &str) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    for tok in line
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        let v = match tok.parse::<Vertex>() {
            Ok(v) if v < g.vertex_count() => v,
            _ => g
                .vertex(tok)
                .ok_or_else(|| invalid(format!("unknown vertex `{tok}`")))?,
        };
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn describe(state: &GameState) -> String {
    let g = state.graph();
    (0..g.vertex_count())
        .map(|v| {
            let name = g.label_of(v).map_or_else(|| v.to_string(), str::to_string);
            if state.is_frozen(v) {
                format!("{name}: done")
            } else {
                format!("{name}: {} tokens, {} to go", state.tokens()[v], state.debt()[v])
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn read_line<R: BufRead>(input: &mut R) -> Result<String> {
    let mut line = String::new();
    if input.read_line(&mut line)? == 0 {
        return Err(Error::Protocol("input closed".into()));
    }
    Ok(line)
}

/// A person playing Lister through a terminal; illegal input is re-asked.
pub struct HumanLister<R, W> {
    input: R,
    output: W,
}

impl<R: BufRead, W: Write> HumanLister<R, W> {
    pub fn new(input: R, output: W) -> Self {
        HumanLister { input, output }
    }
}

impl<R: BufRead, W: Write> ListerStrategy for HumanLister<R, W> {
    fn choose(&mut self, state: &GameState) -> Result<Vec<Vertex>> {
        writeln!(self.output, "round {}\n{}", state.round() + 1, describe(state))?;
        loop {
            write!(self.output, "choose vertices> ")?;
            self.output.flush()?;
            let line = read_line(&mut self.input)?;
            match parse_vertex_set(state.graph(), &line).and_then(|u| state.check_lister(&u).map(|_| u)) {
                Ok(u) => return Ok(u),
                Err(e) => writeln!(self.output, "{e}")?,
            }
        }
    }
}

/// A person playing Painter through a terminal.
pub struct HumanPainter<R, W> {
    input: R,
    output: W,
}

impl<R: BufRead, W: Write> HumanPainter<R, W> {
    pub fn new(input: R, output: W) -> Self {
        HumanPainter { input, output }
    }
}

impl<R: BufRead, W: Write> PainterStrategy for HumanPainter<R, W> {
    fn paint(&mut self, state: &GameState, u: &[Vertex]) -> Result<Vec<Vertex>> {
        writeln!(
            self.output,
            "round {}\n{}\nLister chose {u:?}",
            state.round() + 1,
            describe(state)
        )?;
        loop {
            write!(self.output, "colour independent subset> ")?;
            self.output.flush()?;
            let line = read_line(&mut self.input)?;
            match parse_vertex_set(state.graph(), &line).and_then(|x| state.check_painter(u, &x).map(|_| x)) {
                Ok(x) => return Ok(x),
                Err(e) => writeln!(self.output, "{e}")?,
            }
        }
    }
}
