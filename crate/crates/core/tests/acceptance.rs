//! Acceptance criteria 1-8, run in order with their runtime limits. Prints
//! one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use domblocker::cnf::{gen_1in3, gen_3sat};
use domblocker::domination::CtGamma;
use domblocker::graph::{emit_edge_list_json, is_claw_free};
use domblocker::reductions::{build_clawfree, build_p7free, build_subcubic};
use domblocker::verify::fixtures::{petersen, sat_1in3, unsat_1in3};
use domblocker::verify::suites::{
    clawfree_corpus, fact1_corpus, formula_corpus_1in3, formula_corpus_3sat, run_claim1, run_claim2, run_claim3,
    run_claims45, run_fact1, run_observations, SuiteConfig,
};
use domblocker::verify::{check_clawfree_structure, check_p7_structure, ClaimId, ClaimVerdict};
use domblocker::{is_dominating, is_efficient, LabeledGraph, Solver};

const PATH_BUDGET: u64 = 50_000_000;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Verdicts for `claim`, and how many of them passed.
fn tally(verdicts: &[ClaimVerdict], claim: ClaimId) -> (usize, usize) {
    let of: Vec<_> = verdicts.iter().filter(|v| v.claim == claim).collect();
    (of.len(), of.iter().filter(|v| v.is_pass()).count())
}

fn first_failure(verdicts: &[ClaimVerdict], claims: &[ClaimId]) -> String {
    verdicts
        .iter()
        .find(|v| claims.contains(&v.claim) && !v.is_pass())
        .map(|v| {
            format!(
                "; first non-pass: {}",
                serde_json::to_string(v).expect("verdict serializes")
            )
        })
        .unwrap_or_default()
}

fn all_pass(verdicts: &[ClaimVerdict], claims: &[ClaimId], expected_each: usize) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for &c in claims {
        let (n, p) = tally(verdicts, c);
        ok &= n == expected_each && p == n;
        parts.push(format!("{c} {p}/{n}"));
    }
    (ok, parts.join(", "))
}

fn criterion1(solver: &Solver, cfg: &SuiteConfig) -> Outcome {
    let corpus = fact1_corpus(cfg);
    let exhaustive = corpus.iter().filter(|(name, _)| name.starts_with("exhaustive")).count();
    let verdicts = run_fact1(solver, &corpus);
    let claims = [ClaimId::Fact1, ClaimId::Theorem2];
    let (ok, summary) = all_pass(&verdicts, &claims, corpus.len());
    let shape_ok = exhaustive == 143 && corpus.len() == 343;
    outcome(
        ok && shape_ok,
        format!(
            "{exhaustive} exhaustive + {} random graphs; {summary}{}",
            corpus.len() - exhaustive,
            first_failure(&verdicts, &claims)
        ),
    )
}

fn criterion2(solver: &Solver, cfg: &SuiteConfig) -> Outcome {
    let mut hist = [0usize; 4];
    let mut bad = Vec::new();
    let mut restricted = 0;
    for (name, g) in fact1_corpus(cfg) {
        if solver.domination_number(&g).expect("unbounded").gamma < 2 {
            continue;
        }
        restricted += 1;
        match solver.ct_gamma(&g, 3) {
            Ok(CtGamma::Contractions(k)) if (1..=3).contains(&k) => hist[k] += 1,
            other => bad.push(format!("{name}: {other:?}")),
        }
    }
    outcome(
        bad.is_empty() && restricted > 0,
        format!(
            "{restricted} graphs with gamma >= 2; ct = 1: {}, 2: {}, 3: {}; violations: {:?}",
            hist[1], hist[2], hist[3], bad
        ),
    )
}

fn criterion3(solver: &Solver, cfg: &SuiteConfig) -> Outcome {
    let formulas = formula_corpus_1in3(cfg);
    let mut notes = Vec::new();
    let mut ok = true;

    let (g, _) = build_subcubic(&sat_1in3()).expect("valid fixture");
    let gamma = solver.domination_number(&g).expect("unbounded").gamma;
    let eff = solver.all_efficient_md(&g).expect("unbounded");
    ok &= gamma == 12 && eff.is_yes();
    notes.push(format!("sat fixture gamma {gamma}, all efficient {}", eff.is_yes()));

    let (g, _) = build_subcubic(&unsat_1in3()).expect("valid fixture");
    let gamma = solver.domination_number(&g).expect("unbounded").gamma;
    let eff = solver.all_efficient_md(&g).expect("unbounded");
    let witness_ok = eff
        .witness()
        .is_some_and(|w| w.len() == gamma && is_dominating(&g, w) && !is_efficient(&g, w));
    ok &= gamma >= 17 && witness_ok;
    notes.push(format!(
        "unsat fixture gamma {gamma}, non-efficient witness {:?}",
        eff.witness()
    ));

    let mut verdicts = run_claim1(solver, &formulas);
    verdicts.extend(run_claim2(solver, &formulas));
    let claims = [ClaimId::Claim1, ClaimId::Claim2];
    let (pass, summary) = all_pass(&verdicts, &claims, 12);
    ok &= pass && formulas.len() == 12;
    notes.push(format!(
        "{} formulas; {summary}{}",
        formulas.len(),
        first_failure(&verdicts, &claims)
    ));
    outcome(ok, notes.join("; "))
}

fn criterion4(solver: &Solver, cfg: &SuiteConfig) -> Outcome {
    let corpus = clawfree_corpus(cfg);
    let verdicts = run_claim3(solver, &corpus);
    let (ok, summary) = all_pass(&verdicts, &[ClaimId::Claim3], 11);
    let shifts: Vec<String> = verdicts
        .iter()
        .map(|v| {
            format!(
                "{}: {}-{}={}",
                v.instance, v.facts["gamma_target"], v.facts["gamma_source"], v.facts["shift"]
            )
        })
        .collect();
    let sizes_ok = corpus.iter().all(|(_, g)| g.n() <= 10);
    outcome(
        ok && sizes_ok,
        format!(
            "{summary}; {}{}",
            shifts.join(", "),
            first_failure(&verdicts, &[ClaimId::Claim3])
        ),
    )
}

fn criterion5(cfg: &SuiteConfig) -> Outcome {
    let recognizer_limit = Duration::from_secs(10);
    let mut sources: Vec<(String, LabeledGraph)> = clawfree_corpus(cfg);
    sources.push(("petersen".into(), petersen()));
    for (name, f) in [
        ("subcubic(sat fixture)", sat_1in3()),
        ("subcubic(unsat fixture)", unsat_1in3()),
    ] {
        sources.push((name.into(), build_subcubic(&f).expect("valid fixture").0));
    }
    sources.push((
        "subcubic(gen_1in3 n=12)".into(),
        build_subcubic(&gen_1in3(12, 1).expect("n >= 3")).expect("valid").0,
    ));

    let mut ok = true;
    let mut notes = Vec::new();
    let mut slowest = Duration::ZERO;
    for (name, g) in &sources {
        let (h, map) = build_clawfree(g).expect("degree-{2,3} connected source");
        let t = Instant::now();
        let v = check_clawfree_structure(&h, &map, name);
        let took = t.elapsed();
        slowest = slowest.max(took);
        ok &= v.is_pass() && took < recognizer_limit;
        if h.n() == 666 {
            notes.push(format!("666-vertex build: claw-free {} in {took:?}", is_claw_free(&h)));
        }
        if !v.is_pass() {
            notes.push(format!(
                "{name} failed: {}",
                serde_json::to_string(&v).expect("serializes")
            ));
        }
    }
    ok &= notes.iter().any(|n| n.starts_with("666-vertex"));

    let mut p7 = 0;
    let mut formulas = formula_corpus_3sat();
    formulas.extend((0..20).map(|s| (format!("gen_3sat-n6-m10-seed{s}"), gen_3sat(6, 10, s).expect("n >= 3"))));
    for (name, f) in &formulas {
        let Ok((g, map)) = build_p7free(f) else {
            continue;
        };
        p7 += 1;
        let v = check_p7_structure(&g, &map, name, PATH_BUDGET);
        if !v.is_pass() {
            ok = false;
            notes.push(format!(
                "{name} failed: {}",
                serde_json::to_string(&v).expect("serializes")
            ));
        }
    }
    notes.push(format!(
        "{} claw-free builds, slowest recognizer {slowest:?} (limit {recognizer_limit:?}); {p7} P7-free builds",
        sources.len()
    ));
    outcome(ok && p7 >= 163, notes.join("; "))
}

fn criterion6(solver: &Solver) -> Outcome {
    let formulas = formula_corpus_3sat();
    let verdicts = run_claims45(solver, &formulas);
    let claims = [ClaimId::Claim4, ClaimId::Claim5];
    let (ok, summary) = all_pass(&verdicts, &claims, 163);
    let unsat_gamma = verdicts
        .iter()
        .find(|v| v.claim == ClaimId::Claim4 && v.instance == "3var-all-sign-patterns")
        .and_then(|v| v.facts["gamma"].as_u64());
    outcome(
        ok && formulas.len() == 163,
        format!(
            "{} formulas; {summary}; all-sign-patterns gamma {unsat_gamma:?}{}",
            formulas.len(),
            first_failure(&verdicts, &claims)
        ),
    )
}

/// One canonical-mode pass over gen, build and solve, serialized.
fn artifacts() -> Vec<String> {
    let solver = Solver::default().canonical();
    let mut out = Vec::new();
    for seed in 0..5 {
        let f = gen_1in3(6, seed).expect("n >= 3");
        out.push(f.to_dimacs());
        let (g, map) = build_subcubic(&f).expect("valid");
        out.push(emit_edge_list_json(&g));
        out.push(serde_json::to_string(&map).expect("serializes"));
        let f3 = gen_3sat(4, 6, seed).expect("n >= 3");
        out.push(f3.to_dimacs());
        if let Ok((g, map)) = build_p7free(&f3) {
            out.push(emit_edge_list_json(&g));
            out.push(serde_json::to_string(&map).expect("serializes"));
            out.push(serde_json::to_string(&solver.blocker_report(&g).expect("unbounded")).expect("serializes"));
        }
    }
    for g in [LabeledGraph::cycle(6), LabeledGraph::complete(4), petersen()] {
        let (h, map) = build_clawfree(&g).expect("degree-{2,3} source");
        out.push(emit_edge_list_json(&h));
        out.push(serde_json::to_string(&map).expect("serializes"));
        out.push(serde_json::to_string(&solver.blocker_report(&g).expect("unbounded")).expect("serializes"));
    }
    let (g, _) = build_subcubic(&unsat_1in3()).expect("valid");
    out.push(serde_json::to_string(&solver.blocker_report(&g).expect("unbounded")).expect("serializes"));
    out
}

fn criterion7() -> Outcome {
    let a = artifacts();
    let b = artifacts();
    let differing = a.iter().zip(&b).filter(|(x, y)| x != y).count();
    let bytes: usize = a.iter().map(String::len).sum();
    outcome(
        differing == 0 && a.len() == b.len(),
        format!(
            "{} artifacts ({bytes} bytes) identical across two runs; CLI golden files in crates/cli/tests/golden",
            a.len()
        ),
    )
}

const OBSERVATIONS: [ClaimId; 5] = [
    ClaimId::Obs1,
    ClaimId::Obs2,
    ClaimId::Obs3,
    ClaimId::Obs4,
    ClaimId::ClawfreeStructure,
];

fn criterion8(solver: &Solver, cfg: &SuiteConfig) -> Outcome {
    let verdicts = run_observations(solver, &formula_corpus_1in3(cfg), &clawfree_corpus(cfg), usize::MAX);
    let (ok1, s1) = all_pass(&verdicts, &[ClaimId::Obs1, ClaimId::Obs2], 12);
    let (ok3, s3) = all_pass(
        &verdicts,
        &[ClaimId::Obs3, ClaimId::Obs4, ClaimId::ClawfreeStructure],
        11,
    );
    let exhaustive = verdicts
        .iter()
        .filter(|v| matches!(v.claim, ClaimId::Obs1 | ClaimId::Obs3))
        .all(|v| v.facts["truncated"] == false);
    let sets: u64 = verdicts
        .iter()
        .filter(|v| matches!(v.claim, ClaimId::Obs1 | ClaimId::Obs3))
        .filter_map(|v| v.facts["mds_checked"].as_u64())
        .sum();
    outcome(
        ok1 && ok3 && exhaustive,
        format!(
            "{sets} minimum dominating sets checked, none truncated: {exhaustive}; {s1}; {s3}{}",
            first_failure(&verdicts, &OBSERVATIONS)
        ),
    )
}

fn main() -> ExitCode {
    let solver = Solver::default();
    let cfg = SuiteConfig::default();
    let min = |m: u64| Duration::from_secs(60 * m);
    type Run<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(u32, &str, Duration, Run)> = vec![
        (
            1,
            "one-contraction oracle equivalence",
            min(5),
            Box::new(|| criterion1(&solver, &cfg)),
        ),
        (
            2,
            "ct_gamma <= 3 when gamma >= 2",
            min(10),
            Box::new(|| criterion2(&solver, &cfg)),
        ),
        (
            3,
            "1-in-3 reduction: gamma and efficient MDS",
            min(30),
            Box::new(|| criterion3(&solver, &cfg)),
        ),
        (
            4,
            "claw-free replacement gamma identity",
            min(30),
            Box::new(|| criterion4(&solver, &cfg)),
        ),
        (5, "structural certificates", min(30), Box::new(|| criterion5(&cfg))),
        (
            6,
            "P7-free reduction: gamma and independent MDS",
            min(5),
            Box::new(|| criterion6(&solver)),
        ),
        (7, "determinism in canonical mode", min(5), Box::new(criterion7)),
        (
            8,
            "per-gadget cardinality bounds",
            min(30),
            Box::new(|| criterion8(&solver, &cfg)),
        ),
    ];
    let mut failed = 0;
    let mut out = std::io::stdout().lock();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let o = run();
        let took = start.elapsed();
        let pass = o.ok && took < limit;
        failed += usize::from(!pass);
        let _ = writeln!(
            out,
            "criterion {id} [{name}]: {} in {took:.2?} (limit {limit:?}) | {}",
            if pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    let _ = writeln!(out, "acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
