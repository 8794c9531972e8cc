//! Biconditionals checked instance by instance.

use serde_json::json;

use super::observations::{sweep_mds, MdsSweep};
use super::{
    check_clawfree_structure, check_obs1, check_obs2, check_obs3, check_obs4, check_obs_size4, check_p7_structure,
    ClaimId, ClaimVerdict, Counterexample,
};
use crate::cnf::{solve_1in3_brute, solve_3sat_brute, Flavor, Formula1in3, Formula3Sat, FormulaDoc};
use crate::domination::{is_dominating, is_efficient, is_independent, Contraction, CtGamma, Solver};
use crate::graph::LabeledGraph;
use crate::reductions::{
    assignment_to_mds_p7, assignment_to_mds_subcubic, build_clawfree, build_p7free, build_subcubic,
    lift_dominating_set, mds_to_assignment_p7, mds_to_assignment_subcubic, project_dominating_set,
};

/// Node budget for the induced-path search in P7 structure checks.
const PATH_BUDGET: u64 = 50_000_000;

fn doc_1in3(f: &Formula1in3) -> FormulaDoc {
    FormulaDoc::new(&f.to_cnf(), Flavor::OneInThree)
}

fn doc_3sat(f: &Formula3Sat) -> FormulaDoc {
    FormulaDoc::new(&f.to_cnf(), Flavor::ThreeSat)
}

macro_rules! try_or_skip {
    ($claim:expr, $instance:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return ClaimVerdict::skipped_on($claim, $instance, &err),
        }
    };
}

macro_rules! try_or_skip_all {
    ($claims:expr, $instance:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => {
                return $claims
                    .iter()
                    .map(|&c| ClaimVerdict::skipped_on(c, $instance, &err))
                    .collect()
            }
        }
    };
}

/// Satisfiable iff γ equals `3|X| + |C|`; the certificate converters agree
/// with both oracles.
pub fn verify_claim1(solver: &Solver, f: &Formula1in3, instance: &str) -> ClaimVerdict {
    let claim = ClaimId::Claim1;
    let (g, map) = try_or_skip!(claim, instance, build_subcubic(f));
    let sat = try_or_skip!(claim, instance, solve_1in3_brute(f));
    let gr = try_or_skip!(claim, instance, solver.domination_number(&g));
    let target = map.satisfiable_gamma();
    let facts = json!({ "n": g.n(), "sat": sat.is_sat(), "gamma": gr.gamma, "target": target });
    let cx = || Counterexample::new("").formula(doc_1in3(f));
    if sat.is_sat() != (gr.gamma == target) {
        let mut c = cx().set(&gr.witness);
        c.reason = "satisfiability and the domination number disagree".into();
        return ClaimVerdict::fail(claim, instance, facts, c);
    }
    if let Some(a) = sat.assignment() {
        let d = match assignment_to_mds_subcubic(&map, a) {
            Ok(d) => d,
            Err(e) => {
                let mut c = cx().assignment(a);
                c.reason = format!("assignment rejected: {e}");
                return ClaimVerdict::fail(claim, instance, facts, c);
            }
        };
        if d.len() != target || !is_dominating(&g, &d) || !is_efficient(&g, &d) {
            let mut c = cx().assignment(a).set(&d);
            c.reason = "set built from the assignment is not an efficient dominating set of the target size".into();
            return ClaimVerdict::fail(claim, instance, facts, c);
        }
        if let Err(e) = mds_to_assignment_subcubic(&map, &gr.witness) {
            let mut c = cx().set(&gr.witness);
            c.reason = format!("minimum dominating set does not decode: {e}");
            return ClaimVerdict::fail(claim, instance, facts, c);
        }
    }
    ClaimVerdict::pass(claim, instance, facts)
}

/// γ equals `3|X| + |C|` iff every minimum dominating set is efficient.
pub fn verify_claim2(solver: &Solver, f: &Formula1in3, instance: &str) -> ClaimVerdict {
    let claim = ClaimId::Claim2;
    let (g, map) = try_or_skip!(claim, instance, build_subcubic(f));
    let gr = try_or_skip!(claim, instance, solver.domination_number(&g));
    let eff = try_or_skip!(claim, instance, solver.all_efficient_md(&g));
    let target = map.satisfiable_gamma();
    let mut facts = json!({
        "n": g.n(),
        "gamma": gr.gamma,
        "target": target,
        "all_efficient": eff.is_yes(),
    });
    if let Some(w) = eff.witness() {
        facts["non_efficient_mds"] = json!(w);
        if w.len() != gr.gamma || !is_dominating(&g, w) || is_efficient(&g, w) {
            let c = Counterexample::new("reported witness is not a non-efficient minimum dominating set")
                .formula(doc_1in3(f))
                .set(w);
            return ClaimVerdict::fail(claim, instance, facts, c);
        }
    }
    ClaimVerdict::check(claim, instance, facts, (gr.gamma == target) == eff.is_yes(), || {
        let c = Counterexample::new("domination number and efficiency of minimum dominating sets disagree")
            .formula(doc_1in3(f));
        match eff.witness() {
            Some(w) => c.set(w),
            None => c.set(&gr.witness),
        }
    })
}

/// γ of the claw-free replacement exceeds γ of the source by exactly
/// `5|V_3| + 2|V_2|`, and lifting and projecting minimum dominating sets
/// preserves that identity.
pub fn verify_claim3(solver: &Solver, g: &LabeledGraph, instance: &str) -> ClaimVerdict {
    let claim = ClaimId::Claim3;
    let (h, map) = try_or_skip!(claim, instance, build_clawfree(g));
    let gg = try_or_skip!(claim, instance, solver.domination_number(g));
    let gh = try_or_skip!(claim, instance, solver.domination_number(&h));
    let shift = map.gamma_shift();
    let facts = json!({ "n": h.n(), "gamma_source": gg.gamma, "gamma_target": gh.gamma, "shift": shift });
    if gh.gamma != gg.gamma + shift {
        let c = Counterexample::new("domination numbers differ by the wrong amount")
            .graph(g)
            .set(&gh.witness);
        return ClaimVerdict::fail(claim, instance, facts, c);
    }
    match lift_dominating_set(&map, &gg.witness) {
        Ok(d) if d.len() == gh.gamma && is_dominating(&h, &d) => {}
        Ok(d) => {
            let c = Counterexample::new("lifted set is not a minimum dominating set")
                .graph(g)
                .set(&d);
            return ClaimVerdict::fail(claim, instance, facts, c);
        }
        Err(e) => {
            let c = Counterexample::new(format!("lift failed: {e}"))
                .graph(g)
                .set(&gg.witness);
            return ClaimVerdict::fail(claim, instance, facts, c);
        }
    }
    match project_dominating_set(&map, &gh.witness) {
        Ok(d) if d.len() == gg.gamma && is_dominating(g, &d) => ClaimVerdict::pass(claim, instance, facts),
        Ok(d) => {
            let c = Counterexample::new("projected set is not a minimum dominating set")
                .graph(g)
                .set(&d);
            ClaimVerdict::fail(claim, instance, facts, c)
        }
        Err(e) => {
            let c = Counterexample::new(format!("projection failed: {e}"))
                .graph(g)
                .set(&gh.witness);
            ClaimVerdict::fail(claim, instance, facts, c)
        }
    }
}

/// Satisfiable iff γ equals `|X|` iff every minimum dominating set is
/// independent; plus the structural and lower-bound checks of the P7
/// construction. Returns verdicts for Claim4, Claim5, P7Structure and
/// ObsSize4.
pub fn verify_claims45(solver: &Solver, f: &Formula3Sat, instance: &str) -> Vec<ClaimVerdict> {
    let ids = [
        ClaimId::Claim4,
        ClaimId::Claim5,
        ClaimId::P7Structure,
        ClaimId::ObsSize4,
    ];
    let (g, map) = try_or_skip_all!(ids, instance, build_p7free(f));
    let sat = try_or_skip_all!(ids, instance, solve_3sat_brute(f));
    let gr = try_or_skip_all!(ids, instance, solver.domination_number(&g));
    let ind = try_or_skip_all!(ids, instance, solver.all_independent_md(&g));
    let nx = f.num_vars;
    let facts = json!({
        "n": g.n(),
        "sat": sat.is_sat(),
        "gamma": gr.gamma,
        "num_vars": nx,
        "all_independent": ind.is_yes(),
    });
    let cx = |reason: &str| Counterexample::new(reason).formula(doc_3sat(f));

    let claim4 = if sat.is_sat() != (gr.gamma == nx) {
        ClaimVerdict::fail(
            ClaimId::Claim4,
            instance,
            facts.clone(),
            cx("satisfiability and the domination number disagree").set(&gr.witness),
        )
    } else if let Some(a) = sat.assignment() {
        match assignment_to_mds_p7(&map, a) {
            Ok(d) if d.len() == nx && is_dominating(&g, &d) => match mds_to_assignment_p7(&map, &gr.witness) {
                Ok(_) => ClaimVerdict::pass(ClaimId::Claim4, instance, facts.clone()),
                Err(e) => ClaimVerdict::fail(
                    ClaimId::Claim4,
                    instance,
                    facts.clone(),
                    cx(&format!("minimum dominating set does not decode: {e}")).set(&gr.witness),
                ),
            },
            _ => ClaimVerdict::fail(
                ClaimId::Claim4,
                instance,
                facts.clone(),
                cx("set built from the assignment does not dominate").assignment(a),
            ),
        }
    } else {
        ClaimVerdict::pass(ClaimId::Claim4, instance, facts.clone())
    };

    let witness_ok = ind
        .witness()
        .is_none_or(|w| w.len() == gr.gamma && is_dominating(&g, w) && !is_independent(&g, w));
    let claim5 = ClaimVerdict::check(
        ClaimId::Claim5,
        instance,
        facts,
        witness_ok && (gr.gamma == nx) == ind.is_yes(),
        || {
            let c = cx("domination number and independence of minimum dominating sets disagree");
            match ind.witness() {
                Some(w) => c.set(w),
                None => c.set(&gr.witness),
            }
        },
    );

    vec![
        claim4,
        claim5,
        check_p7_structure(&g, &map, instance, PATH_BUDGET),
        check_obs_size4(&map, &gr.witness, instance),
    ]
}

/// One contraction lowers γ (checked edge by edge) iff some minimum
/// dominating set is not independent, the fast decider agrees, and at most
/// three contractions always suffice when γ ≥ 2. Returns verdicts for
/// Fact1, Theorem2 and HX10Bound.
pub fn verify_fact1_theorem2(solver: &Solver, g: &LabeledGraph, instance: &str) -> Vec<ClaimVerdict> {
    let ids = [ClaimId::Fact1, ClaimId::Theorem2, ClaimId::HX10Bound];
    let gamma = try_or_skip_all!(ids, instance, solver.domination_number(g)).gamma;
    let def = try_or_skip_all!(ids, instance, solver.one_contraction_definitional(g));
    let dec = try_or_skip_all!(ids, instance, solver.one_contraction_decision(g));
    let ind = try_or_skip_all!(ids, instance, solver.all_independent_md(g));
    let ct = try_or_skip_all!(ids, instance, solver.ct_gamma(g, 3));
    let facts = json!({
        "n": g.n(),
        "gamma": gamma,
        "one_contraction": def.is_yes(),
        "all_independent": ind.is_yes(),
        "ct_gamma": ct,
    });
    let lowers = |c: Contraction| -> Result<bool, String> {
        match c {
            Contraction::No => Ok(true),
            Contraction::Yes(u, v) => {
                let h = g.contract_edge(u, v).map_err(|e| e.to_string())?;
                solver
                    .has_dominating_set_within(&h, gamma - 1)
                    .map_err(|e| e.to_string())
            }
        }
    };
    let cx = |reason: &str| Counterexample::new(reason).graph(g);

    // γ = 1 answers no everywhere, so both sides are vacuous there.
    let fact1_ok = gamma == 1 || def.is_yes() != ind.is_yes();
    let fact1 = ClaimVerdict::check(
        ClaimId::Fact1,
        instance,
        facts.clone(),
        fact1_ok && lowers(def) == Ok(true),
        || {
            let c = cx("contraction oracle and independence of minimum dominating sets disagree");
            match (def.edge(), ind.witness()) {
                (Some(e), _) => c.edge(e),
                (None, Some(w)) => c.set(w),
                (None, None) => c,
            }
        },
    );
    let theorem2 = ClaimVerdict::check(
        ClaimId::Theorem2,
        instance,
        facts.clone(),
        dec.is_yes() == def.is_yes() && lowers(dec) == Ok(true),
        || {
            let c = cx("fast decider and contraction oracle disagree");
            match dec.edge().or(def.edge()) {
                Some(e) => c.edge(e),
                None => c,
            }
        },
    );
    let hx10 = if gamma < 2 {
        ClaimVerdict::skipped(ClaimId::HX10Bound, instance, "gamma is 1")
    } else {
        ClaimVerdict::check(
            ClaimId::HX10Bound,
            instance,
            facts,
            matches!(ct, CtGamma::Contractions(1..=3)),
            || cx("three contractions do not lower the domination number"),
        )
    };
    vec![fact1, theorem2, hx10]
}

fn sweep_verdict(claim: ClaimId, instance: &str, failure: Option<ClaimVerdict>, sweep: &MdsSweep) -> ClaimVerdict {
    failure.unwrap_or_else(|| {
        ClaimVerdict::pass(
            claim,
            instance,
            json!({ "mds_checked": sweep.visited, "truncated": sweep.truncated }),
        )
    })
}

/// Gadget counting checks on the 1-in-3 construction: per-gadget lower
/// bounds on up to `limit` minimum dominating sets, and the minimum
/// dominating sets of each isolated variable cycle.
pub fn verify_subcubic_observations(
    solver: &Solver,
    f: &Formula1in3,
    instance: &str,
    limit: usize,
) -> Vec<ClaimVerdict> {
    let ids = [ClaimId::Obs1, ClaimId::Obs2];
    let (g, map) = try_or_skip_all!(ids, instance, build_subcubic(f));
    let gamma = try_or_skip_all!(ids, instance, solver.domination_number(&g)).gamma;
    let mut failure = None;
    let sweep = try_or_skip_all!(
        ids,
        instance,
        sweep_mds(solver, &g, gamma, limit, |d| {
            let v = check_obs1(&map, d, instance);
            let ok = !v.is_fail();
            if !ok {
                failure = Some(v);
            }
            ok
        })
    );
    vec![
        sweep_verdict(ClaimId::Obs1, instance, failure, &sweep),
        check_obs2(&g, &map, instance),
    ]
}

/// Structure of the claw-free replacement, and per-gadget lower and upper
/// bounds on up to `limit` of its minimum dominating sets.
pub fn verify_clawfree_observations(
    solver: &Solver,
    g: &LabeledGraph,
    instance: &str,
    limit: usize,
) -> Vec<ClaimVerdict> {
    let ids = [ClaimId::ClawfreeStructure, ClaimId::Obs3, ClaimId::Obs4];
    let (h, map) = try_or_skip_all!(ids, instance, build_clawfree(g));
    let structure = check_clawfree_structure(&h, &map, instance);
    let gamma = try_or_skip_all!(ids, instance, solver.domination_number(&h)).gamma;
    let (mut fail3, mut fail4) = (None, None);
    let sweep = try_or_skip_all!(
        ids,
        instance,
        sweep_mds(solver, &h, gamma, limit, |d| {
            let v3 = check_obs3(&map, d, instance);
            let v4 = check_obs4(&map, d, instance);
            let ok = !v3.is_fail() && !v4.is_fail();
            fail3 = Some(v3).filter(ClaimVerdict::is_fail);
            fail4 = Some(v4).filter(ClaimVerdict::is_fail);
            ok
        })
    );
    vec![
        structure,
        sweep_verdict(ClaimId::Obs3, instance, fail3, &sweep),
        sweep_verdict(ClaimId::Obs4, instance, fail4, &sweep),
    ]
}
