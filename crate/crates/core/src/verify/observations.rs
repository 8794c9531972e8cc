//! Gadget-local counting and structure checks.

use std::ops::ControlFlow;

use serde_json::json;

use super::{ClaimId, ClaimVerdict, Counterexample};
use crate::domination::{is_dominating, SolveError, Solver};
use crate::graph::{is_claw_free, is_pk_free, LabeledGraph, PathSearch, VertexSet};
use crate::reductions::{ClawfreeReductionMap, GadgetKind, P7ReductionMap, SubcubicReductionMap};

/// Every dominating set meets each variable cycle in at least 3 vertices
/// and each clause gadget in at least 1.
pub fn check_obs1(map: &SubcubicReductionMap, d: &VertexSet, instance: &str) -> ClaimVerdict {
    let var_counts: Vec<usize> = map.variables.iter().map(|gx| d.count_in(&gx.vertices())).collect();
    let clause_counts: Vec<usize> = map.clause_gadgets.iter().map(|cg| d.count_in(&cg.vertices())).collect();
    let ok = var_counts.iter().all(|&c| c >= 3) && clause_counts.iter().all(|&c| c >= 1);
    ClaimVerdict::check(
        ClaimId::Obs1,
        instance,
        json!({ "variable_counts": var_counts, "clause_counts": clause_counts }),
        ok,
        || Counterexample::new("a gadget holds too few members").set(d),
    )
}

/// The minimum dominating sets of each isolated variable cycle are exactly
/// its u-, T- and F-triples.
pub fn check_obs2(g: &LabeledGraph, map: &SubcubicReductionMap, instance: &str) -> ClaimVerdict {
    for (x, gx) in map.variables.iter().enumerate() {
        let mut keep = gx.vertices().to_vec();
        keep.sort_unstable();
        let cycle = g.induced(&keep);
        let local = |v: usize| keep.binary_search(&v).expect("gadget vertex");
        let mut expected: Vec<Vec<usize>> = [gx.u, gx.t, gx.f]
            .iter()
            .map(|s| {
                let mut l: Vec<usize> = s.iter().map(|&v| local(v)).collect();
                l.sort_unstable();
                l
            })
            .collect();
        expected.sort();
        let found: Vec<Vec<usize>> = Solver::default()
            .canonical()
            .all_minimum_dominating_sets(&cycle)
            .expect("unbounded solve on 9 vertices")
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        if found != expected {
            return ClaimVerdict::fail(
                ClaimId::Obs2,
                instance,
                json!({ "variable": x, "found": found, "expected": expected }),
                Counterexample::new(format!("variable {x}: gadget minimum dominating sets differ")).graph(&cycle),
            );
        }
    }
    ClaimVerdict::pass(ClaimId::Obs2, instance, json!({ "variables": map.variables.len() }))
}

fn gadget_counts(map: &ClawfreeReductionMap, d: &VertexSet) -> Vec<usize> {
    map.gadgets
        .iter()
        .map(|g| g.vertices().filter(|&t| d.contains(t)).count())
        .collect()
}

/// Lower bounds for any dominating set of the built graph: at least 5
/// (degree 3) or 2 (degree 2) members per gadget, and at equality no port
/// is a member and some port triangle (degree 3) or port pair (degree 2)
/// is untouched.
pub fn check_obs3(map: &ClawfreeReductionMap, d: &VertexSet, instance: &str) -> ClaimVerdict {
    let counts = gadget_counts(map, d);
    for (g, &count) in map.gadgets.iter().zip(&counts) {
        let low = g.kind.counts()[0];
        let ports_hit = g.ports.iter().any(|&p| d.contains(p));
        let some_side_free = match g.kind {
            GadgetKind::Degree3 => (0..3).any(|j| [g.ports[j], g.u[j], g.w[j]].iter().all(|&t| !d.contains(t))),
            GadgetKind::Degree2 => (0..2).any(|j| !d.contains(g.u[j])),
        };
        let ok = count > low || (count == low && !ports_hit && some_side_free);
        if !ok {
            return ClaimVerdict::fail(
                ClaimId::Obs3,
                instance,
                json!({ "gadget_counts": counts }),
                Counterexample::new(format!("gadget of source vertex {} violates the lower bound", g.source)).set(d),
            );
        }
    }
    ClaimVerdict::pass(ClaimId::Obs3, instance, json!({ "gadget_counts": counts }))
}

/// Upper bounds for a minimum dominating set: at most 6 (degree 3) or 3
/// (degree 2) members per gadget.
pub fn check_obs4(map: &ClawfreeReductionMap, d: &VertexSet, instance: &str) -> ClaimVerdict {
    let counts = gadget_counts(map, d);
    let bad = map.gadgets.iter().zip(&counts).find(|(g, &c)| c > g.kind.counts()[1]);
    ClaimVerdict::check(
        ClaimId::Obs4,
        instance,
        json!({ "gadget_counts": counts }),
        bad.is_none(),
        || {
            let src = bad.map(|(g, _)| g.source).unwrap_or_default();
            Counterexample::new(format!("gadget of source vertex {src} exceeds the upper bound")).set(d)
        },
    )
}

/// Every dominating set meets each literal triangle.
pub fn check_obs_size4(map: &P7ReductionMap, d: &VertexSet, instance: &str) -> ClaimVerdict {
    let miss = map
        .variables
        .iter()
        .position(|t| [t.pos, t.neg, t.u].iter().all(|&v| !d.contains(v)));
    ClaimVerdict::check(
        ClaimId::ObsSize4,
        instance,
        json!({ "size": d.len(), "num_vars": map.num_vars }),
        miss.is_none(),
        || Counterexample::new(format!("triangle of variable {} is missed", miss.unwrap_or_default())).set(d),
    )
}

/// Connected, P7-free by exhaustive induced-path search, `3|X| + |C|`
/// vertices, literal triangles and clause clique present.
pub fn check_p7_structure(g: &LabeledGraph, map: &P7ReductionMap, instance: &str, budget: u64) -> ClaimVerdict {
    let path = is_pk_free(g, 7, budget);
    if path == PathSearch::BudgetExceeded {
        return ClaimVerdict::skipped_budget(
            ClaimId::P7Structure,
            instance,
            "induced path search exceeded its budget",
        );
    }
    let triangles = map
        .variables
        .iter()
        .all(|t| g.has_edge(t.pos, t.neg) && g.has_edge(t.neg, t.u) && g.has_edge(t.pos, t.u));
    let k = map.clique();
    let clique = k
        .iter()
        .enumerate()
        .all(|(i, &a)| k[i + 1..].iter().all(|&b| g.has_edge(a, b)));
    let size = g.n() == 3 * map.num_vars + map.clause_vertices.len();
    let facts = json!({
        "n": g.n(),
        "p7_free": path == PathSearch::Free,
        "connected": g.is_connected(),
        "triangles": triangles,
        "clique": clique,
    });
    let ok = path == PathSearch::Free && g.is_connected() && triangles && clique && size;
    ClaimVerdict::check(ClaimId::P7Structure, instance, facts, ok, || {
        let mut cx = Counterexample::new("structural property violated").graph(g);
        if let PathSearch::Found(p) = &path {
            cx.reason = "induced P7 found".into();
            cx.vertex_set = VertexSet::from_members(g.n(), p.iter().copied()).ok();
        }
        cx
    })
}

/// Claw-free, subcubic, connected, minimum degree 2, and the expected
/// vertex count `18|V_3| + 7|V_2|`.
pub fn check_clawfree_structure(h: &LabeledGraph, map: &ClawfreeReductionMap, instance: &str) -> ClaimVerdict {
    let claw_free = is_claw_free(h);
    let facts = json!({
        "n": h.n(),
        "claw_free": claw_free,
        "max_degree": h.max_degree(),
        "min_degree": h.min_degree(),
        "connected": h.is_connected(),
    });
    let ok = claw_free
        && h.is_subcubic()
        && h.min_degree() == 2
        && h.is_connected()
        && h.n() == 18 * map.v3.len() + 7 * map.v2.len();
    ClaimVerdict::check(ClaimId::ClawfreeStructure, instance, facts, ok, || {
        let mut cx = Counterexample::new("structural property violated").graph(h);
        if let Some(claw) = crate::graph::find_claw(h) {
            cx.reason = "claw found".into();
            cx.vertex_set = VertexSet::from_members(h.n(), claw).ok();
        }
        cx
    })
}

/// Result of running checks over the minimum dominating sets of a graph.
pub(crate) struct MdsSweep {
    pub visited: usize,
    /// The sweep stopped at `limit` sets without a failure.
    pub truncated: bool,
}

/// Runs `check` on minimum dominating sets of `g` in canonical order until
/// it returns `false` or `limit` sets have been visited.
pub(crate) fn sweep_mds<F>(
    solver: &Solver,
    g: &LabeledGraph,
    gamma: usize,
    limit: usize,
    mut check: F,
) -> Result<MdsSweep, SolveError>
where
    F: FnMut(&VertexSet) -> bool,
{
    let mut sweep = MdsSweep {
        visited: 0,
        truncated: false,
    };
    let _ = solver.enumerate_minimum_dominating_sets(g, Some(gamma), |d| {
        if sweep.visited == limit {
            sweep.truncated = true;
            return ControlFlow::Break(());
        }
        sweep.visited += 1;
        debug_assert!(is_dominating(g, d));
        if check(d) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })?;
    Ok(sweep)
}
