//! Exact choosability with bad list assignments as certificates, and the
//! sequence (ch_k - 1) / k.

use std::time::Duration;

use multifold::choosability::{is_ab_choosable, strong_ladder, Choosability};
use multifold::graph::{build_cycle, complete_bipartite};
use multifold::solver::SearchLimits;

fn main() -> multifold::Result<()> {
    let k24 = complete_bipartite(2, 4);
    match is_ab_choosable(&k24, 2, 1, SearchLimits::none())? {
        Choosability::NotChoosable(l) => {
            println!("K_2,4 is not 2-choosable:");
            for v in 0..l.vertex_count() {
                println!("  L({v}) = {:?}", l.list(v));
            }
        }
        other => println!("K_2,4: {other:?}"),
    }

    let c5 = build_cycle(5)?;
    let ladder = strong_ladder(&c5, 2, Some(Duration::from_secs(10)))?;
    for r in &ladder.rungs {
        match (r.ch, r.value) {
            (Some(ch), Some(v)) => println!("C5: ch_{} = {ch}, (ch - 1)/k = {v}", r.k),
            _ => println!("C5: ch_{} timed out", r.k),
        }
    }
    Ok(())
}
