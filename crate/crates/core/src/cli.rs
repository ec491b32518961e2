//! The `multifold` command line.
//!
//! Graphs are read from JSON files or named with `catalog:<id>`; the
//! `G_{n,m,k}` family is also available as `gnmk:n,m,k`. Exit codes: 0 when
//! a witness was found or the claim holds, 10 when the answer is a proven
//! negative, 2 on bad input, 3 when a time or state budget ran out.

use std::ffi::OsString;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{self, gadget, gnmk_params, steinberg_instance, GadgetId};
use crate::choosability::{amplify_catalog_gadget, is_ab_choosable_with, strong_ladder, Choosability, ChooseOptions};
use crate::claims::{self, ClaimContext, Verdict};
use crate::colouring::{is_proper_bfold, uniform_fold, BFoldColouring, Colour, ListAssignment};
use crate::error::{invalid, Error, Result};
use crate::graph::{build_gnmk, Gnmk, Graph};
use crate::hypergraph::{is_b_proper_2colouring, lemma41_bound, random_b_proper_2colouring_par, Hypergraph};
use crate::painting::{
    galvin_orientation, play_game, strategy_cyclic, strategy_fractional, strategy_kernel, ExhaustiveLister,
    ExhaustivePainter, HumanLister, HumanPainter, ListerStrategy, PaintOptions, PaintSolver, PainterStrategy,
    RandomLister, Transcript, Winner,
};
use crate::solver::{
    extend_partial_colouring_within, fractional_chromatic_sweep, solve_ab_colouring_within,
    solve_list_colouring_within, SearchLimits,
};

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_NONE: i32 = 10;

const MAX_ROUNDS: usize = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "multifold",
    version,
    about = "Exact colouring, choosability and painting-game tools for small graphs"
)]
struct Cli {
    /// Print one JSON result document instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; results do not depend on this
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Time budget such as `600s` or `5m`
    #[arg(long, global = true, value_parser = humantime::parse_duration)]
    timeout: Option<Duration>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find an (a,b)-colouring
    Colour {
        #[arg(long)]
        graph: String,
        #[arg(short)]
        a: usize,
        #[arg(short, default_value_t = 1)]
        b: usize,
    },
    /// Find a b-fold colouring from given lists
    ListColour {
        #[arg(long)]
        graph: String,
        /// List assignment JSON, or `catalog:<gadget>` for a gadget's lists
        #[arg(long)]
        lists: String,
        #[arg(short, default_value_t = 1)]
        b: usize,
    },
    /// Complete a partial b-fold colouring using colours 1..=K
    Extend {
        #[arg(long)]
        graph: String,
        /// Colouring JSON, or `catalog:steinberg`
        #[arg(long)]
        partial: String,
        #[arg(long)]
        universe: Colour,
        #[arg(short, default_value_t = 1)]
        b: usize,
    },
    /// Decide (a,b)-choosability; prints a bad assignment when there is one
    Choosable {
        #[arg(long)]
        graph: String,
        #[arg(short)]
        a: usize,
        #[arg(short, default_value_t = 1)]
        b: usize,
    },
    /// (ch_k - 1) / k for k up to kmax; --timeout applies to each k
    Ladder {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        kmax: usize,
    },
    /// Glue gadget copies sharing u and v, one per pair of colour sets
    Amplify {
        #[arg(long)]
        gadget: String,
        #[arg(short, default_value_t = 1)]
        m: usize,
        /// Size of the lists of u and v; defaults to the gadget's list size
        #[arg(long)]
        x_size: Option<usize>,
        /// Also prove the constructed lists admit no colouring
        #[arg(long)]
        check: bool,
        /// Write `amplified.json` and `amplified.lists.json` here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve or play the painting game with f = a and g = b everywhere
    Paint {
        #[arg(long)]
        graph: String,
        #[arg(short)]
        a: u32,
        #[arg(short, default_value_t = 1)]
        b: u32,
        /// Decide the winner by exhaustive search
        #[arg(long, conflicts_with = "painter")]
        exact: bool,
        /// Painter strategy; `kernel` plays on the line graph of a bipartite graph
        #[arg(long, value_enum)]
        painter: Option<PainterKind>,
        #[arg(long, value_enum, default_value = "random")]
        lister: ListerKind,
        /// Games to play against the random Lister, seeds seed..seed+games
        #[arg(long, default_value_t = 1)]
        games: u64,
    },
    /// Play the painting game interactively against the exact solver
    Play {
        #[arg(long)]
        graph: String,
        #[arg(short)]
        a: u32,
        #[arg(short, default_value_t = 1)]
        b: u32,
        #[arg(long, value_enum)]
        human: HumanSide,
        /// Lister used when the human plays Painter
        #[arg(long, value_enum, default_value = "exhaustive")]
        opponent: ListerKind,
    },
    /// Random b-proper 2-colouring of a uniform hypergraph
    Hyper {
        #[arg(long)]
        file: PathBuf,
        #[arg(short)]
        b: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Built-in instances
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check the finite claims; exit 0 only if all pass
    VerifyPaper {
        /// Claim id; repeat to run several, omit to run all
        #[arg(long)]
        claim: Vec<String>,
        /// List claim ids and exit
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    /// Print an instance as graph JSON
    Show {
        id: String,
        /// Print the gadget lists or the Steinberg precolouring instead
        #[arg(long)]
        extra: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PainterKind {
    Cyclic,
    Fractional,
    Kernel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ListerKind {
    Random,
    Exhaustive,
    Stdin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HumanSide {
    Lister,
    Painter,
}

/// Result of one command before printing.
struct Outcome {
    claim: String,
    verdict: String,
    witness: Value,
    code: i32,
    text: String,
}

impl Outcome {
    fn new(claim: impl Into<String>, verdict: impl Into<String>, code: i32) -> Self {
        Outcome {
            claim: claim.into(),
            verdict: verdict.into(),
            witness: Value::Null,
            code,
            text: String::new(),
        }
    }

    fn witness(mut self, w: Value) -> Self {
        self.witness = w;
        self
    }

    fn text(mut self, t: impl Into<String>) -> Self {
        self.text = t.into();
        self
    }
}

struct Io<'a> {
    input: &'a mut dyn BufRead,
    err: &'a mut dyn Write,
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    run(std::env::args_os(), &mut input, &mut io::stdout(), &mut io::stderr())
}

/// Parses `args` (program name first) and runs the command. Interactive
/// prompts go to `err` so that `out` stays machine-readable.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_FOUND };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let start = Instant::now();
    let json_mode = cli.json;
    let outcome = dispatch(&cli, &mut Io { input, err });
    let elapsed_ms = start.elapsed().as_millis();
    match outcome {
        Ok(o) => {
            let printed = if json_mode {
                let doc =
                    json!({"claim": o.claim, "verdict": o.verdict, "witness": o.witness, "elapsed_ms": elapsed_ms});
                writeln!(out, "{doc}")
            } else {
                write!(out, "{}", o.text)
            };
            if printed.is_err() {
                return EXIT_INTERNAL;
            }
            o.code
        }
        Err(e) => {
            let code = error_code(&e);
            if json_mode {
                let verdict = if code == EXIT_BUDGET { "timeout" } else { "error" };
                let doc = json!({"claim": Value::Null, "verdict": verdict, "witness": Value::Null, "elapsed_ms": elapsed_ms, "error": e.to_string()});
                let _ = writeln!(out, "{doc}");
            }
            let _ = writeln!(err, "multifold: {e}");
            code
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Timeout | Error::ResourceLimit(_) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn limits(cli: &Cli) -> SearchLimits {
    cli.timeout
        .map_or_else(SearchLimits::none, |d| SearchLimits::until(Instant::now() + d))
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("cannot read {path}: {e}")))
}

fn load_gnmk(src: &str) -> Result<Option<Gnmk>> {
    if let Some(id) = src.strip_prefix("catalog:") {
        return gnmk_params(id).map(|(n, m, k)| build_gnmk(n, m, k)).transpose();
    }
    if let Some(spec) = src.strip_prefix("gnmk:") {
        let p: Vec<usize> = spec
            .split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| invalid(format!("bad G_{{n,m,k}} spec `{spec}`")))
            })
            .collect::<Result<_>>()?;
        let [n, m, k] = p[..] else {
            return Err(invalid(format!("expected gnmk:n,m,k, got `{src}`")));
        };
        return build_gnmk(n, m, k).map(Some);
    }
    Ok(None)
}

fn load_graph(src: &str) -> Result<Graph> {
    if let Some(g) = load_gnmk(src)? {
        return Ok(g.graph);
    }
    match src.strip_prefix("catalog:") {
        Some(id) => catalog::graph_by_id(id),
        None => Graph::from_json(&read(src)?),
    }
}

fn load_lists(g: &Graph, src: &str) -> Result<ListAssignment> {
    match src.strip_prefix("catalog:") {
        Some(id) => Ok(gadget(GadgetId::parse(id)?, 1)?.lists),
        None => ListAssignment::from_json(g, &read(src)?),
    }
}

fn load_partial(g: &Graph, src: &str) -> Result<BFoldColouring> {
    match src {
        "catalog:steinberg" => Ok(steinberg_instance().partial),
        _ => BFoldColouring::from_json(g, &read(src)?),
    }
}

fn json_of(s: &str) -> Value {
    serde_json::from_str(s).expect("library JSON is valid")
}

/// Refuses to print a witness that does not check out.
fn ensure(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Protocol(format!("{what} failed re-verification")))
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<Outcome> {
    match &cli.command {
        Command::Colour { graph, a, b } => colour(cli, graph, *a, *b),
        Command::ListColour { graph, lists, b } => list_colour(cli, graph, lists, *b),
        Command::Extend {
            graph,
            partial,
            universe,
            b,
        } => extend(cli, graph, partial, *universe, *b),
        Command::Choosable { graph, a, b } => choosable(cli, graph, *a, *b),
        Command::Ladder { graph, kmax } => ladder(cli, graph, *kmax),
        Command::Amplify {
            gadget,
            m,
            x_size,
            check,
            out,
        } => amplify(cli, gadget, *m, *x_size, *check, out.as_ref()),
        Command::Paint {
            graph,
            a,
            b,
            exact,
            painter,
            lister,
            games,
        } => paint(cli, io, graph, *a, *b, *exact, *painter, *lister, *games),
        Command::Play {
            graph,
            a,
            b,
            human,
            opponent,
        } => play(cli, io, graph, *a, *b, *human, *opponent),
        Command::Hyper { file, b, trials } => hyper(cli, file, *b, *trials),
        Command::Catalog { action } => catalog_cmd(action),
        Command::VerifyPaper { claim, list } => verify(cli, claim, *list),
    }
}

fn colour(cli: &Cli, src: &str, a: usize, b: usize) -> Result<Outcome> {
    let g = load_graph(src)?;
    let claim = format!("{src} is ({a},{b})-colourable");
    match solve_ab_colouring_within(&g, a, b, limits(cli))? {
        Some(c) => {
            let c = c.map_colours(|x| x + 1);
            let in_range = c.iter().all(|(_, s)| s.iter().all(|&x| (1..=a as Colour).contains(&x)));
            ensure(
                in_range && is_proper_bfold(&g, &c, &uniform_fold(g.vertex_count(), b))?,
                "colouring",
            )?;
            let text = format!("colourable\n{}\n", c.to_json());
            Ok(Outcome::new(claim, "colourable", EXIT_FOUND)
                .witness(c.to_json_value())
                .text(text))
        }
        None => Ok(Outcome::new(claim, "not-colourable", EXIT_NONE).text("not colourable\n")),
    }
}

fn list_colour(cli: &Cli, src: &str, lists: &str, b: usize) -> Result<Outcome> {
    let g = load_graph(src)?;
    let l = load_lists(&g, lists)?;
    let fold = uniform_fold(g.vertex_count(), b);
    let claim = format!("{src} has a {b}-fold colouring from {lists}");
    match solve_list_colouring_within(&g, &l, &fold, limits(cli))? {
        Some(c) => {
            ensure(l.admits(&g, &c, &fold)?, "list colouring")?;
            let text = format!("colourable\n{}\n", c.to_json());
            Ok(Outcome::new(claim, "colourable", EXIT_FOUND)
                .witness(c.to_json_value())
                .text(text))
        }
        None => Ok(Outcome::new(claim, "not-colourable", EXIT_NONE).text("no colouring from these lists\n")),
    }
}

fn extend(cli: &Cli, src: &str, partial: &str, universe: Colour, b: usize) -> Result<Outcome> {
    let g = load_graph(src)?;
    let p = load_partial(&g, partial)?;
    let colours: Vec<Colour> = (1..=universe).collect();
    let claim = format!("{partial} extends to a {b}-fold colouring of {src} from 1..={universe}");
    match extend_partial_colouring_within(&g, &p, &colours, b, limits(cli))? {
        Some(c) => {
            let keeps = p.iter().all(|(v, s)| c.get(v) == Some(s));
            ensure(
                keeps && is_proper_bfold(&g, &c, &uniform_fold(g.vertex_count(), b))?,
                "extension",
            )?;
            let text = format!("extended\n{}\n", c.to_json());
            Ok(Outcome::new(claim, "extended", EXIT_FOUND)
                .witness(c.to_json_value())
                .text(text))
        }
        None => Ok(Outcome::new(claim, "not-extendable", EXIT_NONE).text("no extension\n")),
    }
}

fn choosable(cli: &Cli, src: &str, a: usize, b: usize) -> Result<Outcome> {
    let g = load_graph(src)?;
    let opts = ChooseOptions {
        limits: limits(cli),
        threads: cli.threads,
        universe: None,
    };
    let claim = format!("{src} is ({a},{b})-choosable");
    match is_ab_choosable_with(&g, a, b, &opts)? {
        Choosability::Choosable => Ok(Outcome::new(claim, "choosable", EXIT_FOUND).text("choosable\n")),
        Choosability::NotChoosable(l) => {
            let sizes_ok = l.sizes().iter().all(|&s| s == a);
            let bad = solve_list_colouring_within(&g, &l, &uniform_fold(g.vertex_count(), b), SearchLimits::none())?
                .is_none();
            ensure(sizes_ok && bad, "bad list assignment")?;
            let text = format!("not choosable; bad lists:\n{}\n", l.to_json());
            Ok(Outcome::new(claim, "not-choosable", EXIT_NONE)
                .witness(json_of(&l.to_json()))
                .text(text))
        }
        Choosability::Timeout => Ok(Outcome::new(claim, "timeout", EXIT_BUDGET).text("timeout\n")),
    }
}

fn ladder(cli: &Cli, src: &str, kmax: usize) -> Result<Outcome> {
    let g = load_graph(src)?;
    let l = strong_ladder(&g, kmax, cli.timeout)?;
    let mut text = String::new();
    let mut rungs = Vec::new();
    for r in &l.rungs {
        match (r.ch, r.value) {
            (Some(ch), Some(v)) => text.push_str(&format!("k = {}: ch_k = {ch}, (ch_k - 1)/k = {v}\n", r.k)),
            _ => text.push_str(&format!("k = {}: timeout\n", r.k)),
        }
        rungs.push(json!({"k": r.k, "ch": r.ch, "value": r.value.map(|v| v.to_string())}));
    }
    let max = l.max.map(|v| v.to_string());
    text.push_str(&format!("lower bound: {}\n", max.as_deref().unwrap_or("none")));
    let complete = l.rungs.iter().all(|r| r.ch.is_some());
    let code = if complete { EXIT_FOUND } else { EXIT_BUDGET };
    let verdict = if complete { "complete" } else { "partial" };
    Ok(
        Outcome::new(format!("choice ladder of {src} up to k = {kmax}"), verdict, code)
            .witness(json!({"rungs": rungs, "max": max}))
            .text(text),
    )
}

fn amplify(
    cli: &Cli,
    id: &str,
    m: usize,
    x_size: Option<usize>,
    check: bool,
    out: Option<&PathBuf>,
) -> Result<Outcome> {
    let amp = amplify_catalog_gadget(GadgetId::parse(id)?, m, x_size)?;
    let n = amp.graph.vertex_count();
    let mut text = format!(
        "{n} vertices, {} edges, {} copies\n",
        amp.graph.edge_count(),
        amp.copies.len()
    );
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("amplified.json"), amp.graph.to_json())?;
        std::fs::write(dir.join("amplified.lists.json"), amp.lists.to_json())?;
        text.push_str(&format!("wrote {}\n", dir.display()));
    }
    let witness = json!({"vertices": n, "edges": amp.graph.edge_count(), "copies": amp.copies.len()});
    let claim = format!("amplified {id} at m = {m} has no colouring from its lists");
    if !check {
        return Ok(Outcome::new(claim, "built", EXIT_FOUND).witness(witness).text(text));
    }
    match solve_list_colouring_within(&amp.graph, &amp.lists, &uniform_fold(n, m), limits(cli))? {
        None => {
            text.push_str("no colouring from the constructed lists\n");
            Ok(Outcome::new(claim, "not-colourable", EXIT_NONE)
                .witness(witness)
                .text(text))
        }
        Some(c) => {
            ensure(amp.lists.admits(&amp.graph, &c, &uniform_fold(n, m))?, "colouring")?;
            text.push_str("colourable\n");
            Ok(Outcome::new(claim, "colourable", EXIT_FOUND)
                .witness(c.to_json_value())
                .text(text))
        }
    }
}

fn make_lister<'a>(
    kind: ListerKind,
    g: &Graph,
    seed: u64,
    cli: &Cli,
    io: &'a mut Io,
) -> Result<Box<dyn ListerStrategy + 'a>> {
    Ok(match kind {
        ListerKind::Random => Box::new(RandomLister::new(seed)),
        ListerKind::Exhaustive => Box::new(ExhaustiveLister::new(g, paint_options(cli))?),
        ListerKind::Stdin => Box::new(HumanLister::new(&mut *io.input, &mut *io.err)),
    })
}

fn paint_options(cli: &Cli) -> PaintOptions {
    PaintOptions {
        limits: limits(cli),
        ..PaintOptions::default()
    }
}

fn winner_code(w: Winner) -> (&'static str, i32) {
    match w {
        Winner::Painter => ("painter", EXIT_FOUND),
        Winner::Lister => ("lister", EXIT_NONE),
    }
}

#[allow(clippy::too_many_arguments)]
fn paint(
    cli: &Cli,
    io: &mut Io,
    src: &str,
    a: u32,
    b: u32,
    exact: bool,
    painter: Option<PainterKind>,
    lister: ListerKind,
    games: u64,
) -> Result<Outcome> {
    let claim = format!("Painter wins the ({a},{b})-painting game on {src}");
    if exact {
        let g = load_graph(src)?;
        let n = g.vertex_count();
        let mut solver = PaintSolver::new(&g, paint_options(cli))?;
        let lister_wins = solver.lister_wins(&vec![a; n], &vec![b; n])?;
        let w = if lister_wins { Winner::Lister } else { Winner::Painter };
        let (verdict, code) = winner_code(w);
        let text = format!("{verdict} wins ({} positions)\n", solver.states());
        return Ok(Outcome::new(claim, verdict, code)
            .witness(json!({"winner": w, "positions": solver.states()}))
            .text(text));
    }
    let kind = painter.ok_or_else(|| invalid("choose --exact or --painter"))?;
    type Factory = Box<dyn Fn() -> Box<dyn PainterStrategy>>;
    let (game_graph, make): (Graph, Factory) = match kind {
        PainterKind::Cyclic => {
            let gn = load_gnmk(src)?.ok_or_else(|| invalid("the cyclic Painter needs catalog:g<nmk> or gnmk:n,m,k"))?;
            let s = strategy_cyclic(&gn);
            (gn.graph, Box::new(move || Box::new(s.clone())))
        }
        PainterKind::Fractional => {
            let g = load_graph(src)?;
            let sweep = fractional_chromatic_sweep(&g, 4)?;
            // smallest chi_q / q, then smallest q
            let (q, p) = sweep
                .ladder
                .iter()
                .copied()
                .min_by(|x, y| (x.1 * y.0).cmp(&(y.1 * x.0)).then(x.0.cmp(&y.0)))
                .expect("non-empty sweep");
            let phi = solve_ab_colouring_within(&g, p, q, SearchLimits::none())?.expect("chi_q colouring exists");
            let s = strategy_fractional(&g, &phi, p as u32)?;
            (g, Box::new(move || Box::new(s.clone())))
        }
        PainterKind::Kernel => {
            let h = load_graph(src)?;
            let go = galvin_orientation(&h)?;
            let n = go.line.graph.vertex_count();
            let s = strategy_kernel(&go.orientation, &vec![a; n], &vec![b; n])?;
            (go.line.graph, Box::new(move || Box::new(s.clone())))
        }
    };
    let n = game_graph.vertex_count();
    let (f, debt) = (vec![a; n], vec![b; n]);
    let games = if lister == ListerKind::Random { games.max(1) } else { 1 };
    let mut wins = 0;
    let mut shown: Option<Transcript> = None;
    for i in 0..games {
        let mut p = make();
        let mut l = make_lister(lister, &game_graph, cli.seed.wrapping_add(i), cli, io)?;
        let t = play_game(&game_graph, &f, &debt, p.as_mut(), l.as_mut(), MAX_ROUNDS)?;
        if t.protocol_error.is_none() {
            let end = t.replay(&game_graph, &f, &debt)?;
            ensure(end.outcome() == Some(t.winner), "transcript")?;
        }
        if t.winner == Winner::Painter {
            wins += 1;
        }
        // keep the first game, or the first one Painter lost
        if shown
            .as_ref()
            .is_none_or(|s| s.winner == Winner::Painter && t.winner == Winner::Lister)
        {
            shown = Some(t);
        }
    }
    let shown = shown.expect("at least one game");
    let w = if wins == games { Winner::Painter } else { Winner::Lister };
    let (verdict, code) = winner_code(w);
    let mut text = format!("Painter won {wins}/{games} games\n");
    text.push_str(&shown.to_json());
    text.push('\n');
    Ok(Outcome::new(claim, verdict, code)
        .witness(json!({"games": games, "painter_wins": wins, "transcript": serde_json::to_value(&shown)?}))
        .text(text))
}

fn play(cli: &Cli, io: &mut Io, src: &str, a: u32, b: u32, human: HumanSide, opponent: ListerKind) -> Result<Outcome> {
    let g = load_graph(src)?;
    let n = g.vertex_count();
    let (f, debt) = (vec![a; n], vec![b; n]);
    writeln!(
        io.err,
        "painting game on {src}: every vertex has {a} tokens and needs {b} colours"
    )?;
    let t = match human {
        HumanSide::Lister => {
            let mut painter = ExhaustivePainter::new(&g, paint_options(cli))?;
            let mut lister = HumanLister::new(&mut *io.input, &mut *io.err);
            play_game(&g, &f, &debt, &mut painter, &mut lister, MAX_ROUNDS)?
        }
        HumanSide::Painter => {
            let mut lister: Box<dyn ListerStrategy> = match opponent {
                ListerKind::Random => Box::new(RandomLister::new(cli.seed)),
                ListerKind::Exhaustive => Box::new(ExhaustiveLister::new(&g, paint_options(cli))?),
                ListerKind::Stdin => return Err(invalid("the opponent cannot read stdin while you do")),
            };
            let mut painter = HumanPainter::new(&mut *io.input, &mut *io.err);
            play_game(&g, &f, &debt, &mut painter, lister.as_mut(), MAX_ROUNDS)?
        }
    };
    if t.protocol_error.is_none() {
        let end = t.replay(&g, &f, &debt)?;
        ensure(end.outcome() == Some(t.winner), "transcript")?;
    }
    let (verdict, code) = winner_code(t.winner);
    writeln!(io.err, "{verdict} wins after {} rounds", t.rounds.len())?;
    Ok(
        Outcome::new(format!("interactive ({a},{b})-painting game on {src}"), verdict, code)
            .witness(serde_json::to_value(&t)?)
            .text(format!("{}\n", t.to_json())),
    )
}

fn hyper(cli: &Cli, file: &Path, b: usize, trials: u64) -> Result<Outcome> {
    let h = Hypergraph::from_json(&read(&file.to_string_lossy())?)?;
    let bound = h
        .uniformity()
        .map(|p| lemma41_bound(p, b, h.edges().len()))
        .transpose()?
        .map(|r| r.to_string());
    let claim = format!("{} has a {b}-proper 2-colouring", file.display());
    let mut text = format!("bound: {}\n", bound.as_deref().unwrap_or("n/a"));
    match random_b_proper_2colouring_par(&h, b, trials, cli.seed, cli.threads)? {
        Some(r) => {
            ensure(is_b_proper_2colouring(&h, &r.colouring, b)?, "2-colouring")?;
            text.push_str(&format!("found at trial {}\n{:?}\n", r.trial, r.colouring));
            Ok(Outcome::new(claim, "coloured", EXIT_FOUND)
                .witness(json!({"colouring": r.colouring, "trial": r.trial, "bound": bound}))
                .text(text))
        }
        None => {
            text.push_str(&format!("none in {trials} trials\n"));
            Ok(Outcome::new(claim, "trials-exhausted", EXIT_BUDGET)
                .witness(json!({"bound": bound}))
                .text(text))
        }
    }
}

fn catalog_cmd(action: &CatalogAction) -> Result<Outcome> {
    match action {
        CatalogAction::List => {
            let text: String = catalog::IDS
                .iter()
                .map(|(id, what)| format!("{id:<10} {what}\n"))
                .collect();
            let ids: Vec<Value> = catalog::IDS
                .iter()
                .map(|(id, what)| json!({"id": id, "description": what}))
                .collect();
            Ok(Outcome::new("catalog", "listed", EXIT_FOUND)
                .witness(Value::Array(ids))
                .text(text))
        }
        CatalogAction::Show { id, extra } => {
            let id = id.strip_prefix("catalog:").unwrap_or(id);
            let files = catalog::json_files(id)?;
            let (name, body) = if *extra {
                files
                    .get(1)
                    .ok_or_else(|| invalid(format!("`{id}` has no lists or precolouring")))?
            } else {
                &files[0]
            };
            Ok(Outcome::new(format!("catalog/{name}"), "shown", EXIT_FOUND)
                .witness(json_of(body))
                .text(body.clone()))
        }
    }
}

fn verify(cli: &Cli, ids: &[String], list: bool) -> Result<Outcome> {
    if list {
        let text: String = claims::claims()
            .iter()
            .map(|c| format!("{:<20} criterion {}  {}\n", c.id, c.criterion, c.statement))
            .collect();
        let ids: Vec<&str> = claims::claims().iter().map(|c| c.id).collect();
        return Ok(Outcome::new("claims", "listed", EXIT_FOUND)
            .witness(json!(ids))
            .text(text));
    }
    let selected: Vec<&claims::Claim> = if ids.is_empty() {
        claims::claims().iter().collect()
    } else {
        ids.iter().map(|id| claims::claim(id)).collect::<Result<_>>()?
    };
    let ctx = ClaimContext {
        seed: cli.seed,
        threads: cli.threads,
    };
    let mut reports = Vec::new();
    let mut text = String::new();
    for c in selected {
        let r = c.run(&ctx)?;
        let tag = match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Timeout => "TIMEOUT",
        };
        text.push_str(&format!(
            "{tag:<8}{:<20}{:>8} ms  {}\n",
            r.claim, r.elapsed_ms, r.detail
        ));
        reports.push(r);
    }
    let code = if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        EXIT_NONE
    } else if reports.iter().any(|r| r.verdict == Verdict::Timeout) {
        EXIT_BUDGET
    } else {
        EXIT_FOUND
    };
    let verdict = match code {
        EXIT_FOUND => "pass",
        EXIT_NONE => "fail",
        _ => "timeout",
    };
    let claim = if reports.len() == 1 {
        reports[0].claim.clone()
    } else {
        "all".into()
    };
    let witness = if reports.len() == 1 {
        reports[0].witness.clone()
    } else {
        serde_json::to_value(&reports)?
    };
    Ok(Outcome::new(claim, verdict, code).witness(witness).text(text))
}
