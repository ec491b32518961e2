//! Glues copies of a gadget over every choice of blocks A and B, so that no
//! colouring of u and v survives.

use multifold::catalog::GadgetId;
use multifold::choosability::amplify_catalog_gadget;
use multifold::colouring::uniform_fold;
use multifold::solver::solve_list_colouring;

fn main() -> multifold::Result<()> {
    let amp = amplify_catalog_gadget(GadgetId::Fig3, 1, Some(3))?;
    let n = amp.graph.vertex_count();
    println!(
        "{} copies, {n} vertices, {} edges",
        amp.copies.len(),
        amp.graph.edge_count()
    );
    let sizes = amp.lists.sizes();
    println!(
        "list sizes from {} to {}",
        sizes.iter().min().unwrap(),
        sizes.iter().max().unwrap()
    );
    let found = solve_list_colouring(&amp.graph, &amp.lists, &uniform_fold(n, 1))?;
    println!("colourable: {}", found.is_some());
    Ok(())
}
