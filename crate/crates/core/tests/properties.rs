//! Property tests over random instances.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use domblocker::cnf::{
    gen_1in3, gen_3sat, parse_formula_json, solve_1in3_brute, solve_3sat_brute, Flavor, Formula1in3, Formula3Sat,
    FormulaDoc, Lit,
};
use domblocker::graph::{
    emit_edge_list_json, emit_graph6, is_claw_free, is_pk_free, parse_edge_list_json, parse_graph6, PathSearch,
};
use domblocker::reductions::{
    assignment_to_mds_p7, assignment_to_mds_subcubic, build_clawfree, build_p7free, build_subcubic,
    lift_dominating_set, mds_to_assignment_subcubic, project_dominating_set,
};
use domblocker::verify::corpus::{random_connected, random_degree23};
use domblocker::{is_dominating, is_efficient, LabeledGraph, Solver, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = if n < 2 { 0 } else { n * (n - 1) / 2 };
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = LabeledGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn connected(seed: u64, n: usize) -> LabeledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected(n, 0.35, &mut rng)
}

/// Exactly one true literal per clause, checked by brute force over
/// assignments built bit by bit.
fn one_in_three_models(f: &Formula1in3) -> usize {
    (0u32..1 << f.num_vars)
        .filter(|mask| {
            f.clauses
                .iter()
                .all(|c| c.iter().filter(|l| (mask >> l.var & 1 == 1) == l.positive).count() == 1)
        })
        .count()
}

#[test]
fn brute_1in3_agrees_with_clause_filter_on_small_formulas() {
    let mut checked = 0;
    for n in 3..=4usize {
        let triples: Vec<[usize; 3]> = (0..n)
            .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
            .collect();
        for m in 1..=4u32 {
            let count = triples.len().pow(m);
            for code in 0..count {
                let mut rest = code;
                let chosen: Vec<[usize; 3]> = (0..m)
                    .map(|_| {
                        let t = triples[rest % triples.len()];
                        rest /= triples.len();
                        t
                    })
                    .collect();
                let f = Formula1in3::from_triples(n, &chosen);
                let brute = solve_1in3_brute(&f).unwrap();
                assert_eq!(brute.is_sat(), one_in_three_models(&f) > 0, "{chosen:?}");
                if let Some(a) = brute.assignment() {
                    assert!(f.is_satisfied_by(a));
                }
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 4 + (4 + 16 + 64 + 256));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn generated_1in3_instances_validate(n in 3usize..16, seed in any::<u64>()) {
        let f = gen_1in3(n, seed).unwrap();
        prop_assert!(f.validate().is_ok());
        prop_assert_eq!(f.clauses.len(), n);
        prop_assert_eq!(&gen_1in3(n, seed).unwrap(), &f);
        let (g, _) = build_subcubic(&f).unwrap();
        prop_assert_eq!(g.n(), 16 * n);
        prop_assert!(g.is_connected());
        prop_assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn dimacs_and_json_round_trip(n in 3usize..20, m in 0usize..30, seed in any::<u64>()) {
        let f = gen_3sat(n, m, seed).unwrap();
        prop_assert!(f.validate().is_ok());
        prop_assert_eq!(&Formula3Sat::from_dimacs(&f.to_dimacs()).unwrap(), &f);
        let doc = FormulaDoc::new(&f.to_cnf(), Flavor::ThreeSat);
        let (flavor, cnf) = parse_formula_json(&doc.to_json()).unwrap();
        prop_assert_eq!(flavor, Flavor::ThreeSat);
        prop_assert_eq!(cnf.into_3sat(), f);
    }

    #[test]
    fn brute_1in3_agrees_with_clause_filter(
        n in 3usize..7,
        clauses in proptest::collection::vec((0usize..7, 0usize..7, 0usize..7, any::<[bool; 3]>()), 1..7),
    ) {
        let clauses: Vec<Vec<Lit>> = clauses
            .into_iter()
            .map(|(a, b, c, s)| {
                [a % n, b % n, c % n]
                    .iter()
                    .zip(s)
                    .map(|(&var, positive)| Lit { var, positive })
                    .collect()
            })
            .collect();
        let f = Formula1in3 { num_vars: n, clauses };
        prop_assert_eq!(solve_1in3_brute(&f).unwrap().is_sat(), one_in_three_models(&f) > 0);
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(70)) {
        let text = emit_graph6(&g).unwrap();
        let h = parse_graph6(&text).unwrap();
        prop_assert_eq!(h.n(), g.n());
        prop_assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(emit_graph6(&h).unwrap(), text);
    }

    #[test]
    fn graph6_parser_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let _ = parse_graph6(&String::from_utf8_lossy(&bytes));
    }

    #[test]
    fn edge_list_json_round_trips_labels(n in 2usize..40, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_degree23(n.max(3), &mut rng);
        let (h, _) = build_clawfree(&g).unwrap();
        prop_assert_eq!(parse_edge_list_json(&emit_edge_list_json(&h)).unwrap(), h);
    }

    #[test]
    fn contraction_lowers_gamma_by_at_most_one(n in 2usize..10, seed in any::<u64>()) {
        let g = connected(seed, n);
        let solver = Solver::default();
        let gamma = solver.domination_number(&g).unwrap().gamma;
        for (u, v) in g.edges() {
            let h = g.contract_edge(u, v).unwrap();
            prop_assert_eq!(h.n(), n - 1);
            prop_assert!(h.is_connected());
            let gh = solver.domination_number(&h).unwrap().gamma;
            prop_assert!(gh == gamma || gh + 1 == gamma, "gamma {gamma} -> {gh}");
        }
    }

    #[test]
    fn enumeration_matches_subset_search(n in 1usize..9, seed in any::<u64>()) {
        let g = connected(seed, n);
        let solver = Solver::default();
        let found = solver.all_minimum_dominating_sets(&g).unwrap();
        let gamma = solver.domination_number(&g).unwrap().gamma;
        let expected: Vec<VertexSet> = (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == gamma)
            .map(|m| VertexSet::from_members(n, (0..n).filter(|v| m >> v & 1 == 1)).unwrap())
            .filter(|s| is_dominating(&g, s))
            .collect();
        let mut sorted = expected.clone();
        sorted.sort();
        prop_assert_eq!(found, sorted);
    }

    #[test]
    fn one_contraction_deciders_agree(n in 1usize..10, seed in any::<u64>()) {
        let g = connected(seed, n);
        let solver = Solver::default();
        let dec = solver.one_contraction_decision(&g).unwrap();
        let def = solver.one_contraction_definitional(&g).unwrap();
        let ind = solver.all_independent_md(&g).unwrap();
        let gamma = solver.domination_number(&g).unwrap().gamma;
        prop_assert_eq!(dec.is_yes(), def.is_yes());
        prop_assert_eq!(def.is_yes(), gamma >= 2 && !ind.is_yes());
        if let Some((u, v)) = dec.edge() {
            let h = g.contract_edge(u, v).unwrap();
            prop_assert_eq!(solver.domination_number(&h).unwrap().gamma, gamma - 1);
        }
    }

    #[test]
    fn clawfree_lift_and_project_preserve_sizes(n in 3usize..9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_degree23(n, &mut rng);
        let (h, map) = build_clawfree(&g).unwrap();
        prop_assert!(is_claw_free(&h));
        let solver = Solver::default();
        let d = solver.domination_number(&g).unwrap().witness;
        let lifted = lift_dominating_set(&map, &d).unwrap();
        prop_assert!(is_dominating(&h, &lifted));
        prop_assert_eq!(lifted.len(), d.len() + map.gamma_shift());
        let dh = solver.domination_number(&h).unwrap().witness;
        let projected = project_dominating_set(&map, &dh).unwrap();
        prop_assert!(is_dominating(&g, &projected));
        prop_assert!(projected.len() + map.gamma_shift() <= dh.len());
    }

    #[test]
    fn satisfying_assignments_map_to_efficient_sets(n in 3usize..10, seed in any::<u64>()) {
        let f = gen_1in3(n, seed).unwrap();
        let (g, map) = build_subcubic(&f).unwrap();
        if let Some(a) = solve_1in3_brute(&f).unwrap().assignment() {
            let d = assignment_to_mds_subcubic(&map, a).unwrap();
            prop_assert_eq!(d.len(), map.satisfiable_gamma());
            prop_assert!(is_dominating(&g, &d) && is_efficient(&g, &d));
            prop_assert_eq!(&mds_to_assignment_subcubic(&map, &d).unwrap(), a);
        }
    }

    #[test]
    fn p7free_builds_are_p7_free(n in 3usize..6, m in 1usize..7, seed in any::<u64>()) {
        let f = gen_3sat(n, m, seed).unwrap();
        let Ok((g, map)) = build_p7free(&f) else {
            return Ok(());
        };
        prop_assert!(g.is_connected());
        prop_assert_eq!(is_pk_free(&g, 7, 50_000_000), PathSearch::Free);
        if let Some(a) = solve_3sat_brute(&f).unwrap().assignment() {
            let d = assignment_to_mds_p7(&map, a).unwrap();
            prop_assert_eq!(d.len(), n);
            prop_assert!(is_dominating(&g, &d));
        }
    }
}
