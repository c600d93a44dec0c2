//! Certificates are plain independent sets; anyone can re-check them.
//!
//!     cargo run --example certificates

use pseudo2f::generators::gen_random;
use pseudo2f::{
    compute_f, solve, verify_certificate, BoundMode, Budgets, DeficiencyCertificate, VertexSet,
};

fn main() -> pseudo2f::Result<()> {
    let b = Budgets::default();
    for seed in 0..8 {
        let g = gen_random(18, 1, 5, seed)?;
        let r = solve(&g, BoundMode::CertificateOnly, &b)?;
        let f = compute_f(&g, &b)?.f_value;
        match &r.certificate {
            None => println!("seed {seed}: 2-factor, f = {f}"),
            Some(c) => println!(
                "seed {seed}: {} non-cycle, certificate value {} (valid: {}), f = {f}",
                r.factor.non_cycle_count,
                c.certificate.value,
                verify_certificate(&g, &c.certificate)
            ),
        }
    }

    // A forged certificate is rejected.
    let g = gen_random(10, 1, 2, 1)?;
    let forged = DeficiencyCertificate {
        witness: VertexSet::from_iter_in(g.n(), [0, 1, 2]),
        value: 5,
    };
    println!(
        "forged certificate accepted: {}",
        verify_certificate(&g, &forged)
    );
    Ok(())
}
