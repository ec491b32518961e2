//! Painting from a fixed (a,b)-colouring: each round Painter paints one
//! colour class of the listed vertices.

use multifold::graph::build_cycle;
use multifold::painting::{play_game, strategy_fractional, uniform_game, RandomLister, Winner};
use multifold::solver::solve_ab_colouring;

fn main() -> multifold::Result<()> {
    let c5 = build_cycle(5)?;
    let phi = solve_ab_colouring(&c5, 5, 2)?.expect("C5 is (5,2)-colourable");
    for tokens in [5, 10, 20, 40] {
        let (f, g) = uniform_game(5, tokens, 2);
        let mut wins = 0;
        for seed in 0..100 {
            let mut painter = strategy_fractional(&c5, &phi, 5)?;
            let t = play_game(&c5, &f, &g, &mut painter, &mut RandomLister::new(seed), 10_000)?;
            wins += (t.winner == Winner::Painter) as u32;
        }
        println!("{tokens} tokens, 2 to paint: Painter won {wins}/100");
    }
    Ok(())
}
