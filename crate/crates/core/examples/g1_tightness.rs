//! The join of a small graph h with p copies of K2 needs p − |h| non-cycle
//! components, matching the bound.
//!
//!     cargo run --example g1_tightness

use pseudo2f::generators::{complete, gen_g1, path};
use pseudo2f::oracle::oracle_min_non_cycle;
use pseudo2f::{solve, BoundMode, Budgets};

fn main() -> pseudo2f::Result<()> {
    let b = Budgets::default();
    for (name, h) in [("K1", complete(1)), ("K2", complete(2)), ("P3", path(3))] {
        for p in h.n() + 1..=h.n() + 3 {
            let g = gen_g1(&h, p)?;
            let r = solve(&g, BoundMode::ExactF, &b)?;
            let best = oracle_min_non_cycle(&g, &b)?.count;
            println!(
                "h={name} p={p}: n={:>2} f={} solver={} optimum={best}",
                g.n(),
                r.bound(),
                r.factor.non_cycle_count
            );
        }
    }
    Ok(())
}
