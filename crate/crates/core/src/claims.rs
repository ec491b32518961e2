//! Finite, checkable claims about the catalog instances and the strategies.
//!
//! Each claim belongs to one acceptance criterion; `verify-paper` and the
//! acceptance test both run this registry.

use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, gadget, steinberg_instance, GadgetId};
use crate::choosability::{amplify_catalog_gadget, is_ab_choosable_with, Choosability, ChooseOptions};
use crate::colouring::{is_proper_bfold, uniform_fold, Colour, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{build_gnmk, complete_bipartite, has_cycle_of_length, path, Graph};
use crate::hypergraph::{
    colouring_transfer, hypergraph_from_lists, lemma41_bound, random_b_proper_2colouring, Hypergraph,
};
use crate::painting::{
    find_kernel, galvin_orientation, play_game, solve_paintable_exact_with, strategy_cyclic, strategy_kernel,
    uniform_game, PaintOptions, RandomLister, Winner,
};
use crate::solver::{extend_partial_colouring_within, solve_ab_colouring, solve_list_colouring_within, SearchLimits};
use crate::Rational;

#[derive(Clone, Copy, Debug)]
pub struct ClaimContext {
    pub seed: u64,
    pub threads: usize,
}

impl Default for ClaimContext {
    fn default() -> Self {
        ClaimContext { seed: 0, threads: 1 }
    }
}

pub struct Claim {
    pub id: &'static str,
    /// Acceptance criterion, 1 to 9.
    pub criterion: u8,
    pub statement: &'static str,
    /// Wall-clock allowance; exceeding it is a timeout.
    pub budget: Duration,
    check: fn(&ClaimContext, Instant) -> Result<Evidence>,
}

struct Evidence {
    pass: bool,
    detail: String,
    witness: Value,
}

fn evidence(pass: bool, detail: impl Into<String>, witness: Value) -> Result<Evidence> {
    Ok(Evidence {
        pass,
        detail: detail.into(),
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Timeout,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub criterion: u8,
    pub verdict: Verdict,
    pub detail: String,
    pub witness: Value,
    pub elapsed_ms: u128,
}

const SEC: Duration = Duration::from_secs(1);
const MIN: Duration = Duration::from_secs(60);

pub fn claims() -> &'static [Claim] {
    const C: &[Claim] = &[
        Claim {
            id: "gadget-fig2-m1",
            criterion: 1,
            statement: "fig2 at m = 1 has no colouring from its 4-lists",
            budget: MIN,
            check: gadget_fig2,
        },
        Claim {
            id: "gadget-fig3-m1",
            criterion: 1,
            statement: "fig3 at m = 1 has no colouring from its 3-lists",
            budget: MIN,
            check: gadget_fig3,
        },
        Claim {
            id: "gadget-fig4-m1",
            criterion: 1,
            statement: "fig4 at m = 1 has no colouring from its 3-lists",
            budget: MIN,
            check: gadget_fig4,
        },
        Claim {
            id: "amplified-fig3",
            criterion: 2,
            statement: "the 56-vertex fig3 composite has no colouring from its 3-lists",
            budget: Duration::from_secs(600),
            check: amplified_fig3,
        },
        Claim {
            id: "steinberg-6-2",
            criterion: 3,
            statement: "the Steinberg graph has no 4- or 5-cycle and its precolouring extends to a (6,2)-colouring",
            budget: Duration::from_secs(600),
            check: steinberg,
        },
        Claim {
            id: "gnmk-fractional",
            criterion: 4,
            statement: "chi_k / k equals n + m + m/k on G_{1,1,1}, G_{1,1,2}, G_{2,1,1}, G_{2,2,2}",
            budget: Duration::from_secs(300),
            check: gnmk_fractional,
        },
        Claim {
            id: "gnmk-cyclic-games",
            criterion: 4,
            statement: "the cyclic Painter wins 1000 random games on each G_{n,m,k} within the bound on rounds meeting every class",
            budget: Duration::from_secs(300),
            check: gnmk_games,
        },
        Claim {
            id: "paint-c5-2-1",
            criterion: 5,
            statement: "Lister wins on C_5 with (2,1)",
            budget: MIN,
            check: paint_c5_2_1,
        },
        Claim {
            id: "paint-c5-3-1",
            criterion: 5,
            statement: "Painter wins on C_5 with (3,1)",
            budget: MIN,
            check: paint_c5_3_1,
        },
        Claim {
            id: "paint-k3-3-1",
            criterion: 5,
            statement: "Painter wins on K_3 with (3,1)",
            budget: MIN,
            check: paint_k3_3_1,
        },
        Claim {
            id: "paint-c5-5-2",
            criterion: 5,
            statement: "Painter wins on C_5 with (5,2)",
            budget: Duration::from_secs(600),
            check: paint_c5_5_2,
        },
        Claim {
            id: "choice-c5",
            criterion: 6,
            statement: "ch(C_5) = 3",
            budget: Duration::from_secs(300),
            check: choice_c5,
        },
        Claim {
            id: "choice-c4",
            criterion: 6,
            statement: "ch(C_4) = 2",
            budget: Duration::from_secs(300),
            check: choice_c4,
        },
        Claim {
            id: "choice-k24",
            criterion: 6,
            statement: "ch(K_{2,4}) = 3 with a bad 2-assignment",
            budget: Duration::from_secs(300),
            check: choice_k24,
        },
        Claim {
            id: "choice-k3",
            criterion: 6,
            statement: "ch(K_3) = 3",
            budget: Duration::from_secs(300),
            check: choice_k3,
        },
        Claim {
            id: "galvin-kernels",
            criterion: 7,
            statement: "Galvin orientations have out-degree below Delta and are kernel-perfect",
            budget: MIN,
            check: galvin_kernels,
        },
        Claim {
            id: "kernel-games",
            criterion: 7,
            statement: "the kernel Painter wins 500 random games for m = 1, 2 on each corpus graph",
            budget: Duration::from_secs(300),
            check: kernel_games,
        },
        Claim {
            id: "hyper-bound",
            criterion: 8,
            statement: "the 2-colouring bound for p = 4, b = 1, m = 7 is 7/8",
            budget: SEC,
            check: hyper_bound,
        },
        Claim {
            id: "hyper-random",
            criterion: 8,
            statement: "random 2-colouring succeeds on 100 random 4-uniform 7-edge hypergraphs",
            budget: MIN,
            check: hyper_random,
        },
        Claim {
            id: "hyper-transfer",
            criterion: 8,
            statement: "200 random list-to-hypergraph reductions transfer to proper list colourings",
            budget: MIN,
            check: hyper_transfer,
        },
        Claim {
            id: "chain",
            criterion: 9,
            statement: "paintable implies choosable implies colourable across the corpus",
            budget: Duration::from_secs(600),
            check: chain,
        },
    ];
    C
}

pub fn claim(id: &str) -> Result<&'static Claim> {
    claims()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

impl Claim {
    pub fn run(&self, ctx: &ClaimContext) -> Result<ClaimReport> {
        let start = Instant::now();
        let outcome = (self.check)(ctx, start + self.budget);
        let elapsed = start.elapsed();
        let (verdict, detail, witness) = match outcome {
            Ok(e) if elapsed > self.budget => (Verdict::Timeout, format!("{} (over budget)", e.detail), e.witness),
            Ok(e) => (if e.pass { Verdict::Pass } else { Verdict::Fail }, e.detail, e.witness),
            Err(Error::Timeout) | Err(Error::ResourceLimit(_)) => {
                (Verdict::Timeout, "budget exhausted".into(), Value::Null)
            }
            Err(e) => return Err(e),
        };
        Ok(ClaimReport {
            claim: self.id.to_string(),
            criterion: self.criterion,
            verdict,
            detail,
            witness,
            elapsed_ms: elapsed.as_millis(),
        })
    }
}

fn gadget_claim(id: GadgetId, n: usize, list: usize, deadline: Instant) -> Result<Evidence> {
    let spec = gadget(id, 1)?;
    let g = &spec.graph;
    let sizes_ok = (0..g.vertex_count())
        .filter(|&v| v != spec.u && v != spec.v)
        .all(|v| spec.lists.list(v).len() == list);
    let found = solve_list_colouring_within(
        g,
        &spec.lists,
        &uniform_fold(g.vertex_count(), 1),
        SearchLimits::until(deadline),
    )?;
    evidence(
        found.is_none() && sizes_ok && g.vertex_count() == n,
        format!(
            "{} vertices, lists of size {list}, colouring found: {}",
            g.vertex_count(),
            found.is_some()
        ),
        json!({"lists": serde_json::from_str::<Value>(&spec.lists.to_json())?}),
    )
}

fn gadget_fig2(_: &ClaimContext, d: Instant) -> Result<Evidence> {
    gadget_claim(GadgetId::Fig2, 9, 4, d)
}

fn gadget_fig3(_: &ClaimContext, d: Instant) -> Result<Evidence> {
    gadget_claim(GadgetId::Fig3, 8, 3, d)
}

fn gadget_fig4(_: &ClaimContext, d: Instant) -> Result<Evidence> {
    gadget_claim(GadgetId::Fig4, 20, 3, d)
}

fn amplified_fig3(_: &ClaimContext, d: Instant) -> Result<Evidence> {
    let amp = amplify_catalog_gadget(GadgetId::Fig3, 1, Some(3))?;
    let n = amp.graph.vertex_count();
    let planar_ok = !has_cycle_of_length(&amp.graph, 4)?;
    let found = solve_list_colouring_within(&amp.graph, &amp.lists, &uniform_fold(n, 1), SearchLimits::until(d))?;
    evidence(
        n == 56 && planar_ok && found.is_none() && amp.lists.sizes().iter().all(|&s| s == 3),
        format!(
            "{n} vertices, {} copies, no 4-cycle: {planar_ok}, colouring found: {}",
            amp.copies.len(),
            found.is_some()
        ),
        Value::Null,
    )
}

fn steinberg(_: &ClaimContext, d: Instant) -> Result<Evidence> {
    let inst = steinberg_instance();
    let g = &inst.graph;
    let partial_ok = inst.partial.conflict(g).is_none() && inst.partial.iter().all(|(_, s)| s.len() == 2);
    let c4 = has_cycle_of_length(g, 4)?;
    let c5 = has_cycle_of_length(g, 5)?;
    let universe: Vec<Colour> = (1..=6).collect();
    let ext = extend_partial_colouring_within(g, &inst.partial, &universe, 2, SearchLimits::until(d))?;
    let ext_ok = ext.as_ref().is_some_and(|c| {
        is_proper_bfold(g, c, &uniform_fold(g.vertex_count(), 2)).unwrap_or(false)
            && inst.partial.iter().all(|(v, s)| c.get(v) == Some(s))
            && c.iter().all(|(_, s)| s.iter().all(|x| universe.contains(x)))
    });
    evidence(
        partial_ok && !c4 && !c5 && ext_ok,
        format!(
            "{} vertices, {} precoloured, 4-cycle: {c4}, 5-cycle: {c5}, extension verified: {ext_ok}",
            g.vertex_count(),
            inst.partial.len()
        ),
        ext.map_or(Value::Null, |c| c.to_json_value()),
    )
}

const GNMK: [(usize, usize, usize); 4] = [(1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 2, 2)];

fn gnmk_fractional(_: &ClaimContext, _: Instant) -> Result<Evidence> {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, m, k) in GNMK {
        let gn = build_gnmk(n, m, k)?;
        let sweep = crate::solver::fractional_chromatic_sweep(&gn.graph, k)?;
        let want = gn.fractional_value();
        pass &= sweep.best == want;
        parts.push(format!("G_{{{n},{m},{k}}}: {} (expected {want})", sweep.best));
    }
    evidence(pass, parts.join("; "), Value::Null)
}

fn gnmk_games(ctx: &ClaimContext, d: Instant) -> Result<Evidence> {
    let mut parts = Vec::new();
    let mut pass = true;
    for (n, m, k) in GNMK {
        let gn = build_gnmk(n, m, k)?;
        let a = (k * (n + m) + m) as u32;
        let (f, g) = uniform_game(gn.graph.vertex_count(), a, k as u32);
        let mut wins = 0;
        let mut worst = 0u64;
        for i in 0..1000u64 {
            if Instant::now() > d {
                return Err(Error::Timeout);
            }
            let mut painter = strategy_cyclic(&gn);
            let mut lister = RandomLister::new(ctx.seed.wrapping_add(i));
            let t = play_game(&gn.graph, &f, &g, &mut painter, &mut lister, 10_000)?;
            let within = Rational::from_integer(painter.case1_count() as i64) <= painter.bound(k);
            if t.winner == Winner::Painter && t.protocol_error.is_none() && within {
                wins += 1;
            }
            worst = worst.max(painter.case1_count());
        }
        pass &= wins == 1000;
        parts.push(format!(
            "G_{{{n},{m},{k}}} ({a},{k}): {wins}/1000, full rounds at most {worst} of {}",
            crate::painting::claim_bound(m, k, k)
        ));
    }
    evidence(pass, parts.join("; "), Value::Null)
}

fn paint_claim(id: &str, a: u32, b: u32, want: Winner, d: Instant) -> Result<Evidence> {
    let g = catalog::graph_by_id(id)?;
    let (f, debt) = uniform_game(g.vertex_count(), a, b);
    let opts = PaintOptions {
        limits: SearchLimits::until(d),
        ..PaintOptions::default()
    };
    let w = solve_paintable_exact_with(&g, &f, &debt, opts)?;
    evidence(w == want, format!("{id} ({a},{b}): {w:?} wins"), json!({ "winner": w }))
}

fn paint_c5_2_1(_: &ClaimContext, d: Instant) -> Result<Evidence> {
    paint_claim("c5", 2, 1, Winner::Lister, d)
}

fn paint_c5_3_1(_: &ClaimContext, d: Instant) -> Result<Evidence> {
    paint_claim("c5", 3, 1, Winner::Painter, d)
}

fn paint_k3_3_1(_: &ClaimContext, d: Instant) -> Result<Evidence> {
    paint_claim("k3", 3, 1, Winner::Painter, d)
}

fn paint_c5_5_2(_: &ClaimContext, d: Instant) -> Result<Evidence> {
    paint_claim("c5", 5, 2, Winner::Painter, d)
}

fn choice_claim(ctx: &ClaimContext, id: &str, want: usize, d: Instant) -> Result<Evidence> {
    let g = catalog::graph_by_id(id)?;
    let opts = ChooseOptions {
        limits: SearchLimits::until(d),
        threads: ctx.threads,
        universe: None,
    };
    let ch = crate::choosability::kfold_choice_number_with(&g, 1, &opts)?;
    let mut witness = Value::Null;
    let mut pass = ch == want;
    if want > 1 {
        if let Choosability::NotChoosable(l) = is_ab_choosable_with(&g, want - 1, 1, &opts)? {
            let n = g.vertex_count();
            let sizes_ok = l.sizes().iter().all(|&s| s == want - 1);
            let none = solve_list_colouring_within(&g, &l, &uniform_fold(n, 1), SearchLimits::until(d))?.is_none();
            pass &= sizes_ok && none;
            witness = serde_json::from_str(&l.to_json())?;
        } else {
            pass = false;
        }
    }
    evidence(pass, format!("ch({id}) = {ch}"), witness)
}

fn choice_c5(ctx: &ClaimContext, d: Instant) -> Result<Evidence> {
    choice_claim(ctx, "c5", 3, d)
}

fn choice_c4(ctx: &ClaimContext, d: Instant) -> Result<Evidence> {
    choice_claim(ctx, "c4", 2, d)
}

fn choice_k24(ctx: &ClaimContext, d: Instant) -> Result<Evidence> {
    choice_claim(ctx, "k24", 3, d)
}

fn choice_k3(ctx: &ClaimContext, d: Instant) -> Result<Evidence> {
    choice_claim(ctx, "k3", 3, d)
}

/// A bipartite graph on 4 + 4 vertices with 8 distinct edges, drawn from `seed`.
pub fn random_bipartite_8(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = sample(&mut rng, 16, 8).into_iter().map(|i| (i / 4, 4 + i % 4));
    Graph::new(8, edges).expect("distinct pairs")
}

fn galvin_corpus(seed: u64) -> Vec<(String, Graph)> {
    vec![
        ("K_{1,3}".into(), complete_bipartite(1, 3)),
        ("K_{2,2}".into(), complete_bipartite(2, 2)),
        ("K_{2,3}".into(), complete_bipartite(2, 3)),
        ("P_5".into(), path(5)),
        (format!("random 8-edge (seed {seed})"), random_bipartite_8(seed)),
    ]
}

fn galvin_kernels(ctx: &ClaimContext, _: Instant) -> Result<Evidence> {
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, h) in galvin_corpus(ctx.seed) {
        let go = galvin_orientation(&h)?;
        let d = &go.orientation;
        let e = d.vertex_count();
        let degree_ok = d.max_out_degree() < h.max_degree();
        let perfect = (1u32..1 << e).all(|mask| {
            let x: Vec<usize> = (0..e).filter(|&i| mask >> i & 1 == 1).collect();
            find_kernel(d, &x).is_some()
        });
        pass &= degree_ok && perfect && d.orients(&go.line.graph);
        parts.push(format!(
            "{name}: out-degree {} vs Delta {}, kernel-perfect: {perfect}",
            d.max_out_degree(),
            h.max_degree()
        ));
    }
    evidence(pass, parts.join("; "), Value::Null)
}

fn kernel_games(ctx: &ClaimContext, deadline: Instant) -> Result<Evidence> {
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, h) in galvin_corpus(ctx.seed) {
        let go = galvin_orientation(&h)?;
        let d = &go.orientation;
        let lg = &go.line.graph;
        for m in [1u32, 2] {
            let f: Vec<u32> = (0..d.vertex_count())
                .map(|v| m * (d.out_degree(v) as u32 + 1))
                .collect();
            let g = vec![m; d.vertex_count()];
            let mut wins = 0;
            for i in 0..500u64 {
                if Instant::now() > deadline {
                    return Err(Error::Timeout);
                }
                let mut painter = strategy_kernel(d, &f, &g)?;
                let mut lister = RandomLister::new(ctx.seed.wrapping_add(i));
                let t = play_game(lg, &f, &g, &mut painter, &mut lister, 10_000)?;
                if t.winner == Winner::Painter && t.protocol_error.is_none() {
                    wins += 1;
                }
            }
            pass &= wins == 500;
            parts.push(format!("{name} m={m}: {wins}/500"));
        }
    }
    evidence(pass, parts.join("; "), Value::Null)
}

fn hyper_bound(_: &ClaimContext, _: Instant) -> Result<Evidence> {
    let v = lemma41_bound(4, 1, 7)?;
    evidence(v == Rational::new(7, 8), format!("bound = {v}"), Value::Null)
}

/// `edges` random `p`-subsets of `n` vertices.
pub fn random_uniform_hypergraph(n: usize, p: usize, edges: usize, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = (0..edges).map(|_| sample(&mut rng, n, p).into_vec()).collect();
    Hypergraph::new(n, e).expect("sampled edges are sets")
}

fn hyper_random(ctx: &ClaimContext, _: Instant) -> Result<Evidence> {
    let mut ok = 0;
    let mut worst = 0;
    for i in 0..100u64 {
        let h = random_uniform_hypergraph(10, 4, 7, ctx.seed.wrapping_add(i));
        if let Some(r) = random_b_proper_2colouring(&h, 1, 1000, ctx.seed.wrapping_add(i))? {
            ok += 1;
            worst = worst.max(r.trial + 1);
        }
    }
    evidence(
        ok == 100,
        format!("{ok}/100 coloured, at most {worst} trials"),
        Value::Null,
    )
}

/// A random bipartite reduction instance: graph, sides, lists of size `k b`.
pub fn random_reduction(seed: u64) -> (Graph, Vec<usize>, Vec<usize>, ListAssignment, usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nx = rng.gen_range(1..=5);
    let ny = rng.gen_range(1..=5);
    let mut edges = Vec::new();
    for x in 0..nx {
        for y in 0..ny {
            if rng.gen_bool(0.5) {
                edges.push((x, nx + y));
            }
        }
    }
    let g = Graph::new(nx + ny, edges).expect("simple");
    // p = kb keeps the colouring bound below 1 for up to 10 vertices
    let (k, b) = if rng.gen_bool(0.5) { (5, 1) } else { (4, 2) };
    let p = k * b;
    let lists: Vec<Vec<Colour>> = (0..nx + ny)
        .map(|_| {
            sample(&mut rng, 2 * p, p)
                .into_iter()
                .map(|c| c as Colour + 1)
                .collect()
        })
        .collect();
    (
        g,
        (0..nx).collect(),
        (nx..nx + ny).collect(),
        ListAssignment::new(lists),
        k,
        b,
    )
}

fn hyper_transfer(ctx: &ClaimContext, _: Instant) -> Result<Evidence> {
    let mut ok = 0;
    for i in 0..200u64 {
        let seed = ctx.seed.wrapping_add(i);
        let (g, x, y, l, k, b) = random_reduction(seed);
        let h = hypergraph_from_lists(&g, &l, k, b)?;
        let Some(r) = random_b_proper_2colouring(&h.hypergraph, b, 1000, seed)? else {
            continue;
        };
        let c = colouring_transfer(&g, &x, &y, &l, &h, &r.colouring, b)?;
        if l.admits(&g, &c, &uniform_fold(g.vertex_count(), b))? {
            ok += 1;
        }
    }
    evidence(ok == 200, format!("{ok}/200 transfers proper"), Value::Null)
}

fn chain(ctx: &ClaimContext, deadline: Instant) -> Result<Evidence> {
    let ids = ["k1", "k2", "k3", "k4", "c4", "c5", "p5", "k13", "k22", "k23"];
    let pairs = [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (5, 2), (6, 2)];
    let mut compared = 0;
    let mut violations = Vec::new();
    for id in ids {
        let g = catalog::graph_by_id(id)?;
        let n = g.vertex_count();
        for (a, b) in pairs {
            if Instant::now() > deadline {
                return Err(Error::Timeout);
            }
            let step = SearchLimits::until((Instant::now() + 2 * SEC).min(deadline));
            let colourable = Some(solve_ab_colouring(&g, a, b)?.is_some());
            let opts = ChooseOptions {
                limits: step,
                threads: ctx.threads,
                universe: None,
            };
            let choosable = match is_ab_choosable_with(&g, a, b, &opts) {
                Ok(Choosability::Choosable) => Some(true),
                Ok(Choosability::NotChoosable(_)) => Some(false),
                Ok(Choosability::Timeout) | Err(Error::Timeout) | Err(Error::ResourceLimit(_)) => None,
                Err(e) => return Err(e),
            };
            let (f, debt) = uniform_game(n, a as u32, b as u32);
            let popts = PaintOptions {
                limits: step,
                max_states: 2_000_000,
                ..PaintOptions::default()
            };
            let paintable = match solve_paintable_exact_with(&g, &f, &debt, popts) {
                Ok(w) => Some(w == Winner::Painter),
                Err(Error::Timeout) | Err(Error::ResourceLimit(_)) | Err(Error::InvalidParameter(_)) => None,
                Err(e) => return Err(e),
            };
            let verdicts = [paintable, choosable, colourable];
            let done = verdicts.iter().flatten().count();
            if done >= 2 {
                compared += 1;
            }
            // a stronger property must never hold where a weaker one fails
            for i in 0..3 {
                for j in i + 1..3 {
                    if verdicts[i] == Some(true) && verdicts[j] == Some(false) {
                        violations.push(format!("{id} ({a},{b})"));
                    }
                }
            }
        }
    }
    evidence(
        violations.is_empty() && compared > 0,
        format!("{compared} instances compared, violations: {violations:?}"),
        Value::Null,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_cover_every_criterion() {
        let mut ids: Vec<_> = claims().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), claims().len());
        for k in 1..=9 {
            assert!(claims().iter().any(|c| c.criterion == k));
        }
        assert!(claim("nope").is_err());
    }

    #[test]
    fn cheap_claims_pass() {
        let ctx = ClaimContext::default();
        for id in ["hyper-bound", "paint-k3-3-1", "gadget-fig3-m1"] {
            assert_eq!(claim(id).unwrap().run(&ctx).unwrap().verdict, Verdict::Pass, "{id}");
        }
    }

    #[test]
    fn random_instances_are_reproducible() {
        assert_eq!(random_bipartite_8(3).edges(), random_bipartite_8(3).edges());
        assert_eq!(random_bipartite_8(3).edge_count(), 8);
        assert_eq!(
            random_uniform_hypergraph(10, 4, 7, 1),
            random_uniform_hypergraph(10, 4, 7, 1)
        );
    }
}
