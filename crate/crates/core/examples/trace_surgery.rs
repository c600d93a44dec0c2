//! Step through the local improvements on a sparse random graph: the greedy
//! packing, each applied move with its potential, and how the run ended.
//!
//!     cargo run --example trace_surgery -- 40 3

use pseudo2f::augment::MoveKind;
use pseudo2f::generators::gen_random;
use pseudo2f::pack_to_optimum;
use pseudo2f::packing::initial_packing;

fn main() -> pseudo2f::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(40) as usize;
    let seed = args.next().unwrap_or(3);
    let g = gen_random(n, 1, 10, seed)?;

    let start = initial_packing(&g);
    println!(
        "greedy packing: {} cycles covering {}/{}",
        start.cycles().len(),
        start.covered().len(),
        n
    );

    let run = pack_to_optimum(&g)?;
    for (i, m) in run.moves.iter().enumerate() {
        print!(
            "{i:>3} {:<9} covered {:>3} -> {:>3}, isolated {:>3} -> {:>3}",
            format!("{:?}", m.kind),
            m.before.covered,
            m.after.covered,
            m.before.isolated,
            m.after.isolated
        );
        if let (Some(t), MoveKind::CaseOne | MoveKind::CaseTwo) = (&m.trace, m.kind) {
            let ys: Vec<usize> = t.steps.iter().map(|s| s.y).collect();
            print!("  r={} y={ys:?}", t.r());
        }
        println!();
    }
    match &run.certificate {
        None => println!("spanning 2-factor found"),
        Some(c) => println!(
            "stopped at x={} ({:?}): I={:?} with value {} >= α(H) = {}",
            c.x,
            c.source,
            c.certificate.witness.to_vec(),
            c.certificate.value,
            c.forest_alpha
        ),
    }
    Ok(())
}
