//! Exact winners of the painting game on small graphs.

use multifold::graph::{build_cycle, complete};
use multifold::painting::{kfold_paint_number, solve_paintable_exact, uniform_game, PaintOptions, PaintSolver};

fn main() -> multifold::Result<()> {
    let c5 = build_cycle(5)?;
    for (a, b) in [(2, 1), (3, 1), (4, 2), (5, 2)] {
        let (f, g) = uniform_game(5, a, b);
        println!("C5 ({a},{b}): {:?} wins", solve_paintable_exact(&c5, &f, &g)?);
    }
    println!("chi_2,P(C5) = {}", kfold_paint_number(&c5, 2)?);

    let k3 = complete(3);
    let mut solver = PaintSolver::new(&k3, PaintOptions::default())?;
    let (f, g) = uniform_game(3, 2, 1);
    if let Some(u) = solver.winning_move(&f, &g)? {
        println!("K3 (2,1): Lister opens with {u:?}");
    }
    println!("positions stored: {}", solver.states());
    Ok(())
}
