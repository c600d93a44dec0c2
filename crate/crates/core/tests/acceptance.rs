//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! A criterion listed in `KNOWN_GAPS` may print FAIL without failing the
//! run, but only if its observed values are exactly the recorded ones and
//! those agree with brute force. Anything else fails the target.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use pseudo2f::augment::MoveKind;
use pseudo2f::deficiency::classical_bound;
use pseudo2f::driver::ComponentKind;
use pseudo2f::forest::forest_alpha;
use pseudo2f::generators::{
    complete, gen_fig3, gen_g1, gen_g2, gen_random, gen_random_forest, path,
};
use pseudo2f::oracle::{oracle_exact_f, oracle_max_two_regular, oracle_min_non_cycle};
use pseudo2f::{
    compute_f, solve, validate, verify_certificate, BoundMode, Budgets, Graph, SolveReport,
};

struct Outcome {
    pass: bool,
    detail: String,
    /// Set when a FAIL is the recorded, brute-force-confirmed gap.
    known_gap: bool,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            known_gap: false,
        }
    }
}

fn budgets() -> Budgets {
    // Lets the subset-scan f(G) cover the 22-vertex instance as well.
    Budgets {
        naive_n: 24,
        ..Budgets::default()
    }
}

/// Everything later criteria need about one instance.
struct Case {
    label: String,
    g: Graph,
    report: SolveReport,
    exact_f: i64,
    alpha: usize,
    delta: usize,
    f_witness_ok: bool,
    f_agrees: bool,
}

fn run_case(label: String, g: Graph, b: &Budgets) -> Result<Case, String> {
    let report =
        solve(&g, BoundMode::CertificateOnly, b).map_err(|e| format!("{label}: solve: {e}"))?;
    let bound = compute_f(&g, b).map_err(|e| format!("{label}: compute_f: {e}"))?;
    let exact_f = oracle_exact_f(&g, b).map_err(|e| format!("{label}: oracle_exact_f: {e}"))?;
    Ok(Case {
        label,
        f_witness_ok: verify_certificate(&g, &bound.certificate)
            && bound.certificate.value == bound.f_value,
        f_agrees: bound.f_value == exact_f,
        alpha: bound.alpha,
        delta: bound.delta,
        exact_f,
        report,
        g,
    })
}

fn random_corpus(b: &Budgets) -> Result<Vec<Case>, String> {
    (0..10_000u64)
        .map(|i| {
            let n = 1 + (i % 12) as usize;
            let p = 1 + (i / 12) % 9;
            let g = gen_random(n, p, 10, i).unwrap();
            run_case(format!("random:n={n},p={p}/10,seed={i}"), g, b)
        })
        .collect()
}

fn fig3() -> Outcome {
    let b = budgets();
    let g = gen_fig3();
    let (max2, _) = oracle_max_two_regular(&g, &b).unwrap();
    let best = oracle_min_non_cycle(&g, &b).unwrap();
    let sizes = best.optimal_cycle_cover_sizes.clone();
    let pass = g.n() == 22
        && max2 == 19
        && best.count == 2
        && sizes == [18]
        && best.factor.cycle_covered() == 18;
    Outcome::new(
        pass,
        format!(
            "n={}, max 2-regular={max2}, min non-cycle={}, optimal cycle-covered sizes={sizes:?}",
            g.n(),
            best.count
        ),
    )
}

fn g2_gap() -> Outcome {
    let b = budgets();
    let mut off = Vec::new();
    let mut rows = Vec::new();
    for k in 1..=5usize {
        let g = gen_g2(k, 2 * k).unwrap();
        let f = compute_f(&g, &b).unwrap().f_value;
        let cb = classical_bound(&g, &b).unwrap();
        rows.push(format!("k={k}: f={f}, classical={cb}"));
        if (f, cb) != (2, k as i64 + 1) {
            off.push((k, f, cb, g));
        }
    }
    let mut out = Outcome::new(off.is_empty(), rows.join("; "));
    // k = 1: {v1, v2, b} has value 3 − 1 + 1 = 3 and α = 3 > 2k, so the
    // closed forms f = 2 and α − δ + 1 = k + 1 need k ≥ 2.
    if let [(1, 3, 3, g)] = off.as_slice() {
        if common::f_value(g) == 3
            && common::alpha(g) as i64 - g.min_degree().unwrap() as i64 + 1 == 3
        {
            out.known_gap = true;
            out.detail +=
                " (k=1 gives f=3, classical=3 by brute force; the closed forms hold for k>=2)";
        }
    }
    out
}

fn g1_tightness() -> Outcome {
    let b = budgets();
    let mut bad = Vec::new();
    let mut checked = 0;
    for (name, h) in [("K1", complete(1)), ("K2", complete(2)), ("P3", path(3))] {
        let hn = h.n();
        for p in hn + 1..=hn + 3 {
            let g = gen_g1(&h, p).unwrap();
            let best = oracle_min_non_cycle(&g, &b).unwrap().count;
            let f = compute_f(&g, &b).unwrap().f_value;
            let got = solve(&g, BoundMode::CertificateOnly, &b).unwrap();
            checked += 1;
            let ok = best == p - hn
                && validate(&g, &got.factor).is_valid()
                && got.factor.non_cycle_count as i64 <= f.max(0);
            if !ok {
                bad.push(format!(
                    "{name},p={p}: oracle={best}, solver={}, f={f}",
                    got.factor.non_cycle_count
                ));
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{checked} instances, max n=15; violations: {bad:?}"),
    )
}

fn bound_on_random(corpus: &[Case]) -> Outcome {
    let mut bad = Vec::new();
    let mut twofactors = 0;
    for c in corpus {
        let count = c.report.factor.non_cycle_count;
        if count == 0 {
            twofactors += 1;
        }
        if !validate(&c.g, &c.report.factor).is_valid() || count as i64 > c.exact_f.max(0) {
            bad.push(c.label.clone());
        }
    }
    Outcome::new(
        bad.is_empty() && corpus.len() >= 10_000,
        format!(
            "{} graphs, n<=12, density 0.1..0.9, {twofactors} 2-factors; violations: {bad:?}",
            corpus.len()
        ),
    )
}

fn consequences(corpus: &[Case]) -> Outcome {
    let (mut c1, mut c2, mut c3) = (0, 0, 0);
    let mut bad = Vec::new();
    for c in corpus {
        let count = c.report.factor.non_cycle_count as i64;
        let (a, d) = (c.alpha as i64, c.delta as i64);
        if a >= d {
            c1 += 1;
            if count > a - d + 1 {
                bad.push(format!("{}: classical", c.label));
            }
        }
        // δ ≥ α + 1
        if d > a {
            c2 += 1;
            if count != 0 {
                bad.push(format!("{}: min degree", c.label));
            }
        }
        // f ≤ 0 exactly when every independent I has δ_G(I) ≥ |I| + 1
        if c.exact_f <= 0 {
            c3 += 1;
            if count != 0 {
                bad.push(format!("{}: independent sets", c.label));
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("premise held: alpha>=delta {c1}, delta>=alpha+1 {c2}, all sets {c3}; violations: {bad:?}"),
    )
}

fn forests() -> Outcome {
    let b = budgets();
    let mut bad = Vec::new();
    for i in 0..1_000u64 {
        let n = 1 + (i % 14) as usize;
        let g = gen_random_forest(n, i);
        let a = forest_alpha(&g, &g.vertices()).unwrap();
        let r = solve(&g, BoundMode::CertificateOnly, &b).unwrap();
        let only_small = r
            .factor
            .components
            .iter()
            .all(|c| c.kind != ComponentKind::Cycle);
        if r.factor.non_cycle_count != a
            || r.factor.components.len() != a
            || !only_small
            || !validate(&g, &r.factor).is_valid()
            || a != common::alpha(&g)
        {
            bad.push(format!("forest:n={n},seed={i}"));
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("1000 forests, n<=14; violations: {bad:?}"),
    )
}

fn audit(cases: &[&Case]) -> Outcome {
    let mut kinds: BTreeMap<&str, usize> = BTreeMap::new();
    let mut bad = Vec::new();
    for c in cases {
        let moves = &c.report.moves;
        let chained = moves.windows(2).all(|w| w[0].after == w[1].before);
        if !chained || moves.iter().any(|m| !m.after.improves_on(&m.before)) {
            bad.push(c.label.clone());
        }
        for m in moves {
            let k = match m.kind {
                MoveKind::Absorb => "absorb",
                MoveKind::Insertion => "insertion",
                MoveKind::CaseOne => "case1",
                MoveKind::CaseTwo => "case2",
            };
            *kinds.entry(k).or_default() += 1;
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{} instances, moves {kinds:?}; every move audited in-run; violations: {bad:?}",
            cases.len()
        ),
    )
}

fn certificates(cases: &[&Case]) -> Outcome {
    let mut bad = Vec::new();
    let (mut packer, mut f_witnesses) = (0, 0);
    for c in cases {
        if let Some(cd) = &c.report.certificate {
            packer += 1;
            if !verify_certificate(&c.g, &cd.certificate) || cd.certificate.value > c.exact_f {
                bad.push(format!("{}: packer certificate", c.label));
            }
        }
        f_witnesses += 1;
        if !c.f_witness_ok || !c.f_agrees {
            bad.push(format!("{}: f witness", c.label));
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{packer} packer certificates, {f_witnesses} f witnesses; violations: {bad:?}"),
    )
}

fn main() -> ExitCode {
    let b = budgets();
    let t = Instant::now();
    let corpus = match random_corpus(&b) {
        Ok(c) => c,
        Err(e) => {
            println!("corpus construction failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut extra = vec![run_case("fig3".into(), gen_fig3(), &b).unwrap()];
    for k in 1..=5 {
        extra.push(run_case(format!("g2:k={k}"), gen_g2(k, 2 * k).unwrap(), &b).unwrap());
    }
    for (name, h) in [("k1", complete(1)), ("k2", complete(2)), ("p3", path(3))] {
        for p in h.n() + 1..=h.n() + 3 {
            extra.push(run_case(format!("g1:h={name},p={p}"), gen_g1(&h, p).unwrap(), &b).unwrap());
        }
    }
    for i in 0..1_000u64 {
        let n = 1 + (i % 14) as usize;
        extra.push(
            run_case(
                format!("forest:n={n},seed={i}"),
                gen_random_forest(n, i),
                &b,
            )
            .unwrap(),
        );
    }
    let everything: Vec<&Case> = corpus.iter().chain(&extra).collect();
    println!("corpus built in {:.1?}", t.elapsed());

    let criteria: [(&str, &dyn Fn() -> Outcome); 8] = [
        ("fig3 reproduction", &fig3),
        ("G2 gap", &g2_gap),
        ("G1 tightness", &g1_tightness),
        ("bound on random graphs", &|| bound_on_random(&corpus)),
        ("bound consequences", &|| consequences(&corpus)),
        ("forest exactness", &forests),
        ("surgery audit", &|| audit(&everything)),
        ("certificate soundness", &|| certificates(&everything)),
    ];
    let mut ok = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let note = if o.known_gap { " [known gap]" } else { "" };
        println!(
            "criterion {} {name}: {verdict}{note} ({:.1?}) {}",
            i + 1,
            t.elapsed(),
            o.detail
        );
        ok &= o.pass || o.known_gap;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
