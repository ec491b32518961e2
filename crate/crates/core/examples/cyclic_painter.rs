//! The cyclic Painter strategy on G_{n,m,k} against random Listers.

use multifold::graph::build_gnmk;
use multifold::painting::{play_game, strategy_cyclic, uniform_game, RandomLister, Winner};

fn main() -> multifold::Result<()> {
    let (n, m, k) = (2, 2, 2);
    let gn = build_gnmk(n, m, k)?;
    let a = (k * (n + m) + m) as u32;
    let b = k as u32;
    let (f, g) = uniform_game(gn.graph.vertex_count(), a, b);
    println!(
        "G_{{{n},{m},{k}}}: {} vertices, game ({a},{b})",
        gn.graph.vertex_count()
    );
    let mut wins = 0;
    for seed in 0..200 {
        let mut painter = strategy_cyclic(&gn);
        let t = play_game(&gn.graph, &f, &g, &mut painter, &mut RandomLister::new(seed), 10_000)?;
        if t.winner == Winner::Painter {
            wins += 1;
        }
        assert!(multifold::Rational::from_integer(painter.case1_count() as i64) <= painter.bound(k));
    }
    println!("Painter won {wins} of 200 games");
    Ok(())
}
