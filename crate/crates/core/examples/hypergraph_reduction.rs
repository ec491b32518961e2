//! Random 2-colourings of a uniform hypergraph, and turning one into a
//! list colouring of a bipartite graph.

use multifold::claims::random_reduction;
use multifold::colouring::{is_proper_bfold, uniform_fold};
use multifold::hypergraph::{colouring_transfer, hypergraph_from_lists, lemma41_bound, random_b_proper_2colouring};

fn main() -> multifold::Result<()> {
    for (p, b, m) in [(4, 1, 7), (8, 2, 20), (10, 3, 5)] {
        println!("p={p} b={b} m={m}: expected bad edges {}", lemma41_bound(p, b, m)?);
    }

    let (g, x, y, l, k, b) = random_reduction(7);
    let h = hypergraph_from_lists(&g, &l, k, b)?;
    println!(
        "graph with {} vertices, lists of size {}; hypergraph on {} colours",
        g.vertex_count(),
        k * b,
        h.hypergraph.vertex_count()
    );
    match random_b_proper_2colouring(&h.hypergraph, b, 1000, 7)? {
        Some(r) => {
            let c = colouring_transfer(&g, &x, &y, &l, &h, &r.colouring, b)?;
            let ok = is_proper_bfold(&g, &c, &uniform_fold(g.vertex_count(), b))?
                && l.admits(&g, &c, &uniform_fold(g.vertex_count(), b))?;
            println!("found at trial {}; transferred colouring valid: {ok}", r.trial);
        }
        None => println!("no colouring within 1000 trials"),
    }
    Ok(())
}
