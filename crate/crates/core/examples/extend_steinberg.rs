//! The planar graph without 4- and 5-cycles that is not 3-colourable. Its
//! precoloured part still extends to a 2-fold colouring from six colours.

use multifold::catalog::steinberg_instance;
use multifold::colouring::Colour;
use multifold::graph::has_cycle_of_length;
use multifold::solver::{extend_partial_colouring, solve_ab_colouring};

fn main() -> multifold::Result<()> {
    let s = steinberg_instance();
    let g = &s.graph;
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    for len in [4, 5] {
        println!("has a {len}-cycle: {}", has_cycle_of_length(g, len)?);
    }
    println!("3-colourable: {}", solve_ab_colouring(g, 3, 1)?.is_some());
    println!("precoloured vertices: {}", s.partial.len());
    let universe: Vec<Colour> = (1..=6).collect();
    let ext = extend_partial_colouring(g, &s.partial, &universe, 2)?;
    println!("extends to a 2-fold colouring from 1..=6: {}", ext.is_some());
    Ok(())
}
