//! Painter strategies: colour-class rotation from a fixed b-fold colouring,
//! the cyclic strategy for blown-up odd cycles, and kernel painting on a
//! kernel-perfect orientation.

use std::collections::BTreeMap;

use super::kernel::{find_kernel, Orientation};
use super::{GameState, PainterStrategy};
use crate::colouring::{BFoldColouring, Colour};
use crate::error::{invalid, Error, Result};
use crate::graph::{Gnmk, Graph, Vertex};
use crate::rational::Rational;

fn mask_of(u: &[Vertex]) -> Vec<u64> {
    let mut words = vec![0u64; u.iter().max().map_or(0, |&m| m / 64 + 1)];
    for &v in u {
        words[v / 64] |= 1 << (v % 64);
    }
    words
}

/// Paints `φ⁻¹(τ) ∩ U`, where `τ ≡ t (mod a)` and `t` counts how often `U`
/// has been chosen so far, this round included. Colours of `φ` are read
/// modulo `a`, so `{0..a-1}` and `{1..a}` palettes behave the same.
#[derive(Clone, Debug)]
pub struct FractionalStrategy {
    a: u32,
    phi: BFoldColouring,
    counts: BTreeMap<Vec<u64>, u64>,
    last_tau: Option<u32>,
}

pub fn strategy_fractional(g: &Graph, phi: &BFoldColouring, a: u32) -> Result<FractionalStrategy> {
    if a == 0 {
        return Err(invalid("a must be positive"));
    }
    if !phi.is_total(g) {
        return Err(invalid("colouring must cover every vertex"));
    }
    if let Some((u, v)) = phi.conflict(g) {
        return Err(Error::ImproperPartial(u, v));
    }
    let reduced = phi.map_colours(|c| c % a);
    for v in 0..g.vertex_count() {
        if reduced.get(v).map(|s| s.len()) != phi.get(v).map(|s| s.len()) {
            return Err(invalid(format!("vertex {v} has two colours congruent modulo {a}")));
        }
    }
    if let Some((u, v)) = reduced.conflict(g) {
        return Err(invalid(format!("colouring is improper modulo {a} on edge ({u}, {v})")));
    }
    Ok(FractionalStrategy {
        a,
        phi: reduced,
        counts: BTreeMap::new(),
        last_tau: None,
    })
}

impl FractionalStrategy {
    /// `τ` used in the most recent round.
    pub fn last_tau(&self) -> Option<u32> {
        self.last_tau
    }

    /// How often `u` has been chosen.
    pub fn times_chosen(&self, u: &[Vertex]) -> u64 {
        self.counts.get(&mask_of(u)).copied().unwrap_or(0)
    }

    /// `Σ_{U ∋ v} t_U`, the number of rounds in which `v` was chosen.
    pub fn vertex_total(&self, v: Vertex) -> u64 {
        self.counts
            .iter()
            .filter(|(m, _)| m.get(v / 64).is_some_and(|w| w >> (v % 64) & 1 == 1))
            .map(|(_, &t)| t)
            .sum()
    }
}

impl PainterStrategy for FractionalStrategy {
    fn paint(&mut self, _: &GameState, u: &[Vertex]) -> Result<Vec<Vertex>> {
        let t = self.counts.entry(mask_of(u)).or_insert(0);
        *t += 1;
        let tau = (*t % self.a as u64) as Colour;
        self.last_tau = Some(tau);
        let mut x: Vec<Vertex> = u
            .iter()
            .copied()
            .filter(|&v| self.phi.get(v).is_some_and(|s| s.contains(&tau)))
            .collect();
        x.sort_unstable();
        Ok(x)
    }

    fn memo_key(&self) -> Option<Vec<u64>> {
        let a = self.a as u64;
        let mut key = Vec::new();
        for (m, &t) in &self.counts {
            if t % a != 0 {
                key.extend(m.iter().copied());
                key.push(u64::MAX - t % a);
            }
        }
        Some(key)
    }
}

/// The two-case strategy on `G_{n,m,k}`.
#[derive(Clone, Debug)]
pub struct CyclicStrategy {
    k: usize,
    m: usize,
    class_of: Vec<usize>,
    /// Rounds so far in which `U` met every class.
    case1: u64,
    last_tau: Option<usize>,
}

pub fn strategy_cyclic(gnmk: &Gnmk) -> CyclicStrategy {
    CyclicStrategy {
        k: gnmk.k,
        m: gnmk.m,
        class_of: gnmk.class_of.clone(),
        case1: 0,
        last_tau: None,
    }
}

/// `m b (2k + 1) / k`, the most rounds a game can contain in which `U`
/// meets every class.
pub fn claim_bound(m: usize, b: usize, k: usize) -> Rational {
    Rational::new((m * b * (2 * k + 1)) as i64, k as i64)
}

impl CyclicStrategy {
    pub fn case1_count(&self) -> u64 {
        self.case1
    }

    /// `τ` of the latest round in which `U` met every class.
    pub fn last_tau(&self) -> Option<usize> {
        self.last_tau
    }

    pub fn bound(&self, b: usize) -> Rational {
        claim_bound(self.m, b, self.k)
    }

    fn classes(&self) -> usize {
        2 * self.k + 1
    }

    /// Lowest vertex of `u` in class `c`.
    fn lowest_in(&self, u: &[Vertex], c: usize) -> Option<Vertex> {
        u.iter().copied().filter(|&v| self.class_of[v] == c).min()
    }
}

impl PainterStrategy for CyclicStrategy {
    fn paint(&mut self, _: &GameState, u: &[Vertex]) -> Result<Vec<Vertex>> {
        let p = self.classes();
        let mut boundary = vec![false; p];
        for &v in u {
            boundary[self.class_of[v]] = true;
        }
        let mut x = Vec::new();
        if boundary.iter().all(|&b| b) {
            self.case1 += 1;
            let tau = (self.case1 % p as u64) as usize;
            self.last_tau = Some(tau);
            for i in 0..self.k {
                let c = (tau + 2 * i) % p;
                x.push(self.lowest_in(u, c).expect("U meets every class"));
            }
        } else {
            let s = boundary.iter().position(|&b| !b).expect("some class missed");
            let mut prev_taken = false;
            for step in 0..p {
                let j = (s + step) % p;
                let taken = !prev_taken && boundary[j];
                if taken {
                    x.push(self.lowest_in(u, j).expect("class met"));
                }
                prev_taken = taken;
            }
        }
        x.sort_unstable();
        Ok(x)
    }

    fn memo_key(&self) -> Option<Vec<u64>> {
        Some(vec![self.case1 % self.classes() as u64])
    }
}

/// Paints a kernel of `U` in a kernel-perfect orientation and checks after
/// every round that `tokens(v) ≥ Σ_{u ∈ N⁺[v]} debt(u)` still holds.
#[derive(Clone, Debug)]
pub struct KernelStrategy {
    d: Orientation,
    checks: u64,
}

fn slack_violation(d: &Orientation, tokens: &[u32], debt: &[u32]) -> Option<Vertex> {
    (0..d.vertex_count()).find(|&v| {
        let need: u32 = debt[v] + d.out_neighbours(v).iter().map(|&u| debt[u]).sum::<u32>();
        tokens[v] < need
    })
}

pub fn strategy_kernel(d: &Orientation, f: &[u32], debt: &[u32]) -> Result<KernelStrategy> {
    if f.len() != d.vertex_count() || debt.len() != d.vertex_count() {
        return Err(invalid("token and demand vectors must match the orientation"));
    }
    if let Some(v) = slack_violation(d, f, debt) {
        return Err(invalid(format!(
            "f({v}) is below the demand of its closed out-neighbourhood"
        )));
    }
    Ok(KernelStrategy {
        d: d.clone(),
        checks: 0,
    })
}

impl KernelStrategy {
    /// Rounds in which the token inequality was verified.
    pub fn checks(&self) -> u64 {
        self.checks
    }
}

impl PainterStrategy for KernelStrategy {
    fn paint(&mut self, state: &GameState, u: &[Vertex]) -> Result<Vec<Vertex>> {
        let x = find_kernel(&self.d, u).ok_or_else(|| Error::Protocol("no kernel in the chosen set".into()))?;
        let mut tokens = state.tokens().to_vec();
        let mut debt = state.debt().to_vec();
        for &v in u {
            tokens[v] -= 1;
        }
        for &v in &x {
            debt[v] -= 1;
        }
        if let Some(v) = slack_violation(&self.d, &tokens, &debt) {
            return Err(Error::Protocol(format!(
                "token inequality fails at {v} after round {}",
                state.round() + 1
            )));
        }
        self.checks += 1;
        Ok(x)
    }

    fn memo_key(&self) -> Option<Vec<u64>> {
        Some(Vec::new())
    }
}
