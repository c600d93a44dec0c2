//! Solver count against the optimum and f(G) over a seeded corpus.
//!
//!     cargo run --release --example random_sweep -- 500

use pseudo2f::generators::gen_random;
use pseudo2f::oracle::oracle_min_non_cycle;
use pseudo2f::{compute_f, solve, BoundMode, Budgets};

fn main() -> pseudo2f::Result<()> {
    let count: u64 = std::env::args()
        .nth(1)
        .map_or(200, |a| a.parse().expect("integer argument"));
    let b = Budgets::default();
    let (mut optimal, mut at_bound, mut worst_gap) = (0, 0, 0);
    for seed in 0..count {
        let n = 4 + (seed % 11) as usize;
        let g = gen_random(n, 1 + seed % 4, 10, seed)?;
        let got = solve(&g, BoundMode::CertificateOnly, &b)?
            .factor
            .non_cycle_count;
        let best = oracle_min_non_cycle(&g, &b)?.count;
        let f = compute_f(&g, &b)?.f_value.max(0) as usize;
        assert!(best <= got && got <= f);
        optimal += usize::from(got == best);
        at_bound += usize::from(got == f);
        worst_gap = worst_gap.max(got - best);
    }
    println!("{count} graphs: optimal {optimal}, count equal to max(0, f) {at_bound}, worst gap to optimum {worst_gap}");
    Ok(())
}
