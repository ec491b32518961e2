//! Multifold colourings of the 5-cycle and a bracket on its fractional
//! chromatic number.

use multifold::graph::build_cycle;
use multifold::solver::{b_fold_chromatic_number, fractional_chromatic_sweep, solve_ab_colouring};

fn main() -> multifold::Result<()> {
    let c5 = build_cycle(5)?;
    for b in 1..=3 {
        println!("chi_{b}(C5) = {}", b_fold_chromatic_number(&c5, b)?);
    }
    let c = solve_ab_colouring(&c5, 5, 2)?.expect("C5 is (5,2)-colourable");
    for (v, s) in c.iter() {
        println!("  vertex {v}: {s:?}");
    }
    assert!(solve_ab_colouring(&c5, 4, 2)?.is_none());

    let sweep = fractional_chromatic_sweep(&c5, 4)?;
    println!(
        "best a/b = {}, lower bound = {}, exact = {}",
        sweep.best, sweep.lower_bound, sweep.exact
    );
    Ok(())
}
