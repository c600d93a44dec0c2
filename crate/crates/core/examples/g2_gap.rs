//! f(G) against the classical bound α − δ + 1 on the two-clique family.
//!
//!     cargo run --example g2_gap

use pseudo2f::generators::{gen_g2, G2Layout};
use pseudo2f::{compute_f, Budgets};

fn main() -> pseudo2f::Result<()> {
    println!(
        "{:>2} {:>3} {:>3} {:>3} {:>4}  witness",
        "k", "n", "f", "α", "α-δ+1"
    );
    for k in 1..=6 {
        let g = gen_g2(k, 2 * k)?;
        let r = compute_f(&g, &Budgets::default())?;
        println!(
            "{k:>2} {:>3} {:>3} {:>3} {:>4}  {:?}",
            g.n(),
            r.f_value,
            r.alpha,
            r.classical_bound,
            r.certificate.witness.to_vec()
        );
    }
    let l = G2Layout::new(3, 6);
    println!(
        "layout for k=3: v1={} v2={} A1={:?} A2={:?} B={:?}",
        l.v1, l.v2, l.a1, l.a2, l.b
    );
    Ok(())
}
