//! Kernel-based painting of the line graph of a bipartite graph, using a
//! Galvin orientation.

use multifold::graph::complete_bipartite;
use multifold::painting::{galvin_orientation, play_game, strategy_kernel, RandomLister};

fn main() -> multifold::Result<()> {
    let h = complete_bipartite(3, 3);
    let go = galvin_orientation(&h)?;
    let d = &go.orientation;
    println!(
        "line graph of K_3,3: {} vertices, max out-degree {}",
        d.vertex_count(),
        d.max_out_degree()
    );
    let m = 2;
    let f: Vec<u32> = (0..d.vertex_count())
        .map(|v| m * (d.out_degree(v) as u32 + 1))
        .collect();
    let g = vec![m; d.vertex_count()];
    for seed in 0..5 {
        let mut painter = strategy_kernel(d, &f, &g)?;
        let t = play_game(
            &go.line.graph,
            &f,
            &g,
            &mut painter,
            &mut RandomLister::new(seed),
            10_000,
        )?;
        println!("seed {seed}: {:?} in {} rounds", t.winner, t.rounds.len());
    }
    Ok(())
}
