//! Values computed independently (networkx rebuild of each construction,
//! scipy MILP or brute-force γ) by tools/oracles/oracle.py and frozen here.

use domblocker::cnf::solve_3sat_brute;
use domblocker::cnf::{Formula3Sat, Lit};
use domblocker::domination::{CtGamma, YesNo};
use domblocker::reductions::{build_clawfree, build_p7free, build_subcubic};
use domblocker::verify::corpus::{all_sign_patterns, connected_graphs, connected_graphs_up_to, three_var_formulas};
use domblocker::verify::fixtures::{clawfree_sources, petersen, sat_1in3, unsat_1in3};
use domblocker::{LabeledGraph, Solver};

fn gamma(g: &LabeledGraph) -> usize {
    Solver::default().domination_number(g).expect("unbounded").gamma
}

#[test]
fn subcubic_fixture_domination_numbers() {
    let (g, _) = build_subcubic(&sat_1in3()).unwrap();
    assert_eq!((g.n(), gamma(&g)), (48, 12));
    let (g, _) = build_subcubic(&unsat_1in3()).unwrap();
    assert_eq!((g.n(), gamma(&g)), (64, 17));
}

#[test]
fn clawfree_domination_numbers() {
    let expected = [
        ("C4", 28, 2, 10),
        ("C5", 35, 2, 12),
        ("C6", 42, 2, 14),
        ("C9", 63, 3, 21),
        ("K4", 72, 1, 21),
        ("prism", 108, 2, 32),
    ];
    let sources = clawfree_sources();
    assert_eq!(sources.len(), expected.len());
    for ((name, src), (ename, n, gs, gh)) in sources.iter().zip(expected) {
        assert_eq!(name, ename);
        let (h, _) = build_clawfree(src).unwrap();
        assert_eq!((h.n(), gamma(src), gamma(&h)), (n, gs, gh), "{name}");
    }
    let (h, _) = build_clawfree(&petersen()).unwrap();
    assert_eq!((h.n(), gamma(&petersen()), gamma(&h)), (180, 3, 53));
}

#[test]
fn clawfree_of_subcubic_fixture_has_666_vertices() {
    let (g, _) = build_subcubic(&sat_1in3()).unwrap();
    let (h, _) = build_clawfree(&g).unwrap();
    assert_eq!(h.n(), 666);
}

#[test]
fn p7free_domination_numbers() {
    let single = Formula3Sat::new(3, vec![[Lit::pos(0), Lit::pos(1), Lit::neg(2)]]);
    let (g, _) = build_p7free(&single).unwrap();
    assert_eq!((g.n(), gamma(&g)), (10, 3));
    let (g, _) = build_p7free(&all_sign_patterns()).unwrap();
    assert_eq!((g.n(), gamma(&g)), (17, 4));
}

#[test]
fn three_variable_family_is_all_satisfiable() {
    let fs = three_var_formulas(4);
    assert_eq!(fs.len(), 162);
    assert!(fs.iter().all(|f| solve_3sat_brute(f).unwrap().is_sat()));
    assert!(!solve_3sat_brute(&all_sign_patterns()).unwrap().is_sat());
}

#[test]
fn connected_graph_counts() {
    let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn contraction_statistics_on_small_graphs() {
    let solver = Solver::default();
    let graphs = connected_graphs_up_to(6);
    assert_eq!(graphs.len(), 143);
    let mut yes = 0;
    let mut gamma_ge2 = 0;
    let mut hist = [0usize; 4];
    for g in &graphs {
        if solver.one_contraction_definitional(g).unwrap().is_yes() {
            yes += 1;
        }
        if let CtGamma::Contractions(k) = solver.ct_gamma(g, 3).unwrap() {
            gamma_ge2 += 1;
            hist[k] += 1;
        }
    }
    assert_eq!(yes, 74);
    assert_eq!(gamma_ge2, 90);
    assert_eq!(hist, [0, 74, 14, 2]);
}

#[test]
fn blocker_reports_of_named_graphs() {
    let solver = Solver::default().canonical();
    let cases = [
        (LabeledGraph::cycle(6), 2, YesNo::No, 3, YesNo::Yes),
        (LabeledGraph::path(4), 2, YesNo::Yes, 1, YesNo::No),
        (petersen(), 3, YesNo::No, 2, YesNo::No),
    ];
    for (g, gm, one, ct, eff) in cases {
        let r = solver.blocker_report(&g).unwrap();
        assert_eq!(r.gamma, gm);
        assert_eq!(r.one_contraction, Some(one));
        assert_eq!(r.ct_gamma, Some(CtGamma::Contractions(ct)));
        assert_eq!(r.all_efficient, Some(eff));
    }
}
