//! Solve the 22-vertex separating graph and compare with the exact oracles.
//!
//!     cargo run --example solve_fig3

use pseudo2f::generators::gen_fig3;
use pseudo2f::oracle::{oracle_max_two_regular, oracle_min_non_cycle};
use pseudo2f::{solve, BoundMode, Budgets};

fn main() -> pseudo2f::Result<()> {
    let g = gen_fig3();
    let budgets = Budgets::default();

    let report = solve(&g, BoundMode::ExactF, &budgets)?;
    println!(
        "solver: {} non-cycle components, f(G) = {}",
        report.factor.non_cycle_count,
        report.bound()
    );
    for c in &report.factor.components {
        println!("  {:?} {:?}", c.kind, c.vertices);
    }

    let (order, _) = oracle_max_two_regular(&g, &budgets)?;
    let best = oracle_min_non_cycle(&g, &budgets)?;
    println!("largest 2-regular subgraph: {order} vertices");
    println!(
        "fewest non-cycle components: {} (cycles then cover {:?} vertices)",
        best.count, best.optimal_cycle_cover_sizes
    );
    Ok(())
}
