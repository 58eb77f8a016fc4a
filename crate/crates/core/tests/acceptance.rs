//! Exit criteria. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p signed-laplacian --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::*;
use signed_laplacian::balance::{self, laplacian_rank, switch, switching_equivalent};
use signed_laplacian::bounds::{self, unsigned_corollaries, unsigned_corollaries_direct, BoundId, Direction};
use signed_laplacian::harness::{trial_seed, GraphRng};
use signed_laplacian::spectra::{self, laplacian_spectrum, sign_all};
use signed_laplacian::{degree_profile, Sign, SignedGraph};

const SANDWICH_TOL: f64 = 1e-9;
const EQUALITY_TOL: f64 = 1e-7;
const SPECTRUM_TOL: f64 = 1e-9;
const RANK_TOL: f64 = 1e-8;
const WRAPPER_TOL: f64 = 1e-12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity_corpus() -> Vec<SignedGraph> {
    mixed_corpus(500, 12, 0xACCE_0001)
}

/// 1. tr(L) = s1, tr(L²) = s1 + s2, tr(L³) = s3 + 3 s2 − 6 t± in integers.
fn trace_identities() -> Outcome {
    let start = Instant::now();
    let corpus = identity_corpus();
    let mut failures = 0;
    for g in &corpus {
        let p = degree_profile(g);
        let (s1, s2, s3) = (p.s1 as i64, p.s2 as i64, p.s3 as i64);
        let (pos, neg) = brute_force_triangles(g);
        let l = spectra::laplacian(g);
        let expected = [s1, s1 + s2, s3 + 3 * s2 - 6 * (pos - neg)];
        for (k, want) in (1..=3).zip(expected) {
            if spectra::trace_moment(&l, k).unwrap() != want {
                failures += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    check(failures == 0, || format!("{failures} mismatches"))?;
    check(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{} graphs, 0 failures, {elapsed:.2?}", corpus.len()))
}

/// 2. Closed-form N1, N2, N3 equal jᵀLᵏj.
fn rayleigh_identities() -> Outcome {
    let corpus = identity_corpus();
    let mut failures = 0;
    for g in &corpus {
        let l = dense_laplacian(g);
        for k in 1..=3 {
            if spectra::rayleigh_moment(g, k).unwrap() != total(&mat_pow(&l, k)) {
                failures += 1;
            }
        }
    }
    check(failures == 0, || format!("{failures} mismatches"))?;
    Ok(format!("{} graphs, 0 failures", corpus.len()))
}

/// 3. Numerical rank of L equals n − b(Σ).
fn rank_identity() -> Outcome {
    let corpus = identity_corpus();
    let disconnected = corpus.iter().filter(|g| !balance::is_connected(g)).count();
    check(disconnected > 0, || "corpus has no disconnected graphs".into())?;
    let mut failures = 0;
    for g in &corpus {
        if laplacian_spectrum(g).unwrap().rank(RANK_TOL) != laplacian_rank(g) {
            failures += 1;
        }
    }
    check(failures == 0, || format!("{failures} mismatches"))?;
    Ok(format!("{} graphs ({disconnected} disconnected), 0 failures", corpus.len()))
}

/// 4. Every applicable bound brackets λmax on connected random graphs.
fn sandwich() -> Outcome {
    const LOWER: [BoundId; 8] = [
        BoundId::LbNet1,
        BoundId::LbNet2,
        BoundId::LbNet3,
        BoundId::LbTr1,
        BoundId::LbTr2,
        BoundId::LbTr3,
        BoundId::LbInterlace,
        BoundId::Kb5,
    ];
    const UPPER: [BoundId; 8] = [
        BoundId::UbRank,
        BoundId::UbWangEdge,
        BoundId::UbWangGlobal,
        BoundId::UbAllNeg,
        BoundId::Kb1,
        BoundId::Kb2,
        BoundId::Kb3,
        BoundId::Kb4,
    ];
    let start = Instant::now();
    let corpus = connected_corpus(1000, 12, 0.5, 0xACCE_0004);
    let mut failures = Vec::new();
    let mut applicable = 0usize;
    for (i, g) in corpus.iter().enumerate() {
        let e = bounds::evaluate_all(g).map_err(|e| format!("graph {i}: {e}"))?;
        let lambda = e.lambda_max();
        for id in LOWER.into_iter().chain(UPPER) {
            let Some(v) = e.get(id).get() else { continue };
            applicable += 1;
            let ok = match id.direction() {
                Direction::Lower => v <= lambda + SANDWICH_TOL,
                Direction::Upper => lambda <= v + SANDWICH_TOL,
            };
            if !ok {
                failures.push(format!("graph {i} {id}: {v} vs {lambda}"));
            }
        }
    }
    let elapsed = start.elapsed();
    check(failures.is_empty(), || failures.join("; "))?;
    check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} graphs, {applicable} bound evaluations, 0 violations, {elapsed:.2?}", corpus.len()))
}

/// 5. Equality cases.
fn equality_cases() -> Outcome {
    let expect = |name: &str, g: &SignedGraph, ids: &[BoundId], want: f64| -> Result<(), String> {
        let e = bounds::evaluate_all(g).map_err(|e| e.to_string())?;
        check((e.lambda_max() - want).abs() < EQUALITY_TOL, || format!("{name}: λmax {} != {want}", e.lambda_max()))?;
        for &id in ids {
            let v = e.get(id).get().ok_or_else(|| format!("{name} {id} inapplicable"))?;
            check((v - want).abs() < EQUALITY_TOL, || format!("{name} {id} = {v}, want {want}"))?;
        }
        Ok(())
    };
    expect(
        "K3N",
        &k3n(),
        &[
            BoundId::LbNet1,
            BoundId::LbNet2,
            BoundId::LbNet3,
            BoundId::UbRank,
            BoundId::UbWangEdge,
            BoundId::UbWangGlobal,
            BoundId::UbAllNeg,
        ],
        4.0,
    )?;
    expect(
        "P3P",
        &p3p(),
        &[BoundId::UbRank, BoundId::UbWangEdge, BoundId::UbWangGlobal, BoundId::Kb1, BoundId::Kb5],
        3.0,
    )?;
    expect("K3P", &k3p(), &[BoundId::LbTr1, BoundId::LbTr3], 3.0)?;

    let k3 = k3p();
    let e = bounds::evaluate_all(&k3).map_err(|e| e.to_string())?;
    let slb = e.get(BoundId::NeqSlb1).get().ok_or("NEQ-SLB-1 inapplicable")?;
    check((e.lambda_max_signless - 4.0).abs() < EQUALITY_TOL, || format!("λmax(Q(K3)) = {}", e.lambda_max_signless))?;
    check((slb - e.lambda_max_signless).abs() < EQUALITY_TOL, || format!("NEQ-SLB-1 = {slb}"))?;
    Ok("K3N, P3P, K3P, K3 all tight".into())
}

/// 6. Switching preserves the spectrum and is detected with a valid witness.
fn switching_invariance() -> Outcome {
    let corpus = mixed_corpus(500, 12, 0xACCE_0006);
    let mut worst: f64 = 0.0;
    for (i, g) in corpus.iter().enumerate() {
        let mut rng = GraphRng::new(trial_seed(0x7E7A, i));
        let theta = rng.switching(g.order());
        let h = switch(g, &theta).unwrap();
        let dev = laplacian_spectrum(g).unwrap().max_deviation(&laplacian_spectrum(&h).unwrap());
        worst = worst.max(dev);
        check(dev <= SPECTRUM_TOL, || format!("graph {i}: spectra differ by {dev:e}"))?;
        let witness = switching_equivalent(g, &h).ok_or_else(|| format!("graph {i}: not detected"))?;
        check(switch(g, &witness).unwrap() == h, || format!("graph {i}: witness does not switch"))?;
    }
    Ok(format!("{} pairs, max deviation {worst:.1e}", corpus.len()))
}

/// 7. λmax(L(Σ)) = λmax(L(Γ,−1)) exactly when Σ ~ (Γ,−1).
fn all_negative_equality() -> Outcome {
    let mut corpus = connected_corpus(200, 12, 0.5, 0xACCE_0007);
    corpus.extend(connected_corpus(150, 10, 0.9, 0xACCE_0107));
    corpus.extend(connected_corpus(150, 8, 1.0, 0xACCE_0207));
    let (mut equal, mut strict) = (0, 0);
    for (i, g) in corpus.iter().enumerate() {
        let lambda = spectra::spectral_radius_laplacian(g).unwrap();
        let negative = spectra::spectral_radius_laplacian(&sign_all(g, Sign::Neg)).unwrap();
        let tight = (lambda - negative).abs() < EQUALITY_TOL;
        let equivalent = switching_equivalent(g, &sign_all(g, Sign::Neg)).is_some();
        check(tight == equivalent, || {
            format!("graph {i}: tight={tight} equivalent={equivalent} ({lambda} vs {negative})")
        })?;
        if tight {
            equal += 1;
        } else {
            strict += 1;
        }
    }
    check(equal > 0 && strict > 0, || format!("one-sided sample: {equal} equal, {strict} strict"))?;
    Ok(format!("{} graphs: {equal} equivalent and tight, {strict} strict", corpus.len()))
}

/// 8. Known small spectra.
fn eigensolver_oracle() -> Outcome {
    let cases: [(&str, SignedGraph, &[f64]); 4] = [
        ("K3P", k3p(), &[0.0, 3.0, 3.0]),
        ("K3N", k3n(), &[1.0, 1.0, 4.0]),
        ("P3P", p3p(), &[0.0, 1.0, 3.0]),
        ("K1,3", star(3, 1), &[0.0, 1.0, 1.0, 4.0]),
    ];
    for (name, g, want) in cases {
        let got = laplacian_spectrum(&g).unwrap();
        check(got.values().len() == want.len(), || format!("{name}: wrong length"))?;
        for (a, b) in got.values().iter().zip(want) {
            check((a - b).abs() <= SPECTRUM_TOL, || format!("{name}: {:?} vs {want:?}", got.values()))?;
        }
    }
    Ok("4 spectra match".into())
}

/// 9. Unsigned corollaries: delegation and direct formulas agree.
fn unsigned_wrappers() -> Outcome {
    let corpus = mixed_corpus(200, 12, 0xACCE_0009);
    let mut compared = 0;
    for (i, g) in corpus.iter().enumerate() {
        let delegated = unsigned_corollaries(g).map_err(|e| e.to_string())?;
        let direct = unsigned_corollaries_direct(g).map_err(|e| e.to_string())?;
        for (a, b) in delegated.iter().zip(&direct) {
            check(a.id == b.id && a.is_applicable() == b.is_applicable(), || format!("graph {i}: {a:?} vs {b:?}"))?;
            if let (Some(x), Some(y)) = (a.get(), b.get()) {
                compared += 1;
                check((x - y).abs() <= WRAPPER_TOL, || format!("graph {i} {}: {x} vs {y}", a.id))?;
            }
        }
    }
    Ok(format!("{} graphs, {compared} values agree", corpus.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("1 trace identities", trace_identities),
        ("2 Rayleigh-moment identities", rayleigh_identities),
        ("3 rank identity", rank_identity),
        ("4 sandwich property", sandwich),
        ("5 equality cases", equality_cases),
        ("6 switching invariance", switching_invariance),
        ("7 all-negative equality characterization", all_negative_equality),
        ("8 eigensolver oracle", eigensolver_oracle),
        ("9 unsigned-wrapper consistency", unsigned_wrappers),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
