//! On a forest the fewest K1/K2 components equals the independence number,
//! realised by a maximum matching plus the unmatched vertices.
//!
//!     cargo run --example forest_factor -- 20 7

use pseudo2f::forest::{forest_alpha, forest_max_independent_set, forest_pseudo_factor};
use pseudo2f::generators::gen_random_forest;

fn main() -> pseudo2f::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(16) as usize;
    let seed = args.next().unwrap_or(1);

    let g = gen_random_forest(n, seed);
    let all = g.vertices();
    println!("forest on {n} vertices, {} edges", g.m());
    let f = forest_pseudo_factor(&g, &all)?;
    println!("K2: {:?}", f.matched_edges);
    println!("K1: {:?}", f.singletons.to_vec());
    println!(
        "components {} = α {}",
        f.component_count(),
        forest_alpha(&g, &all)?
    );
    println!(
        "a maximum independent set: {:?}",
        forest_max_independent_set(&g, &all)?.to_vec()
    );
    Ok(())
}
