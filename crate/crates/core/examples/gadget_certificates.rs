//! Each planar gadget has a list assignment with no colouring, even though
//! its lists are long.

use multifold::catalog::{gadget, GadgetId};
use multifold::colouring::uniform_fold;
use multifold::solver::solve_list_colouring;

fn main() -> multifold::Result<()> {
    for id in [GadgetId::Fig2, GadgetId::Fig3, GadgetId::Fig4] {
        for m in 1..=2 {
            let spec = gadget(id, m)?;
            let n = spec.graph.vertex_count();
            let found = solve_list_colouring(&spec.graph, &spec.lists, &uniform_fold(n, m))?;
            println!(
                "{} m={m}: {n} vertices, {} edges, lists of size {}, {}",
                id.name(),
                spec.graph.edge_count(),
                spec.list_size(),
                if found.is_some() { "colourable" } else { "no colouring" }
            );
        }
    }
    Ok(())
}
