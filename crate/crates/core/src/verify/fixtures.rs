//! Named instances shared by the harness, the tests and the CLI.

use crate::cnf::{gen_1in3, Formula1in3, Formula3Sat, Lit};
use crate::graph::LabeledGraph;

/// Three copies of the clause (a, b, c): satisfiable.
pub fn sat_1in3() -> Formula1in3 {
    Formula1in3::from_triples(3, &[[0, 1, 2]; 3])
}

/// (a,b,c), (a,b,d), (a,c,d), (b,c,d): unsatisfiable.
pub fn unsat_1in3() -> Formula1in3 {
    Formula1in3::from_triples(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
}

/// The two fixed 1-in-3 fixtures plus `random` generated instances with
/// 3 or 4 variables, seeds `seed..seed + random`.
pub fn formulas_1in3(random: usize, seed: u64) -> Vec<(String, Formula1in3)> {
    let mut out = vec![
        ("1in3-sat-3x(abc)".to_string(), sat_1in3()),
        ("1in3-unsat-4var".to_string(), unsat_1in3()),
    ];
    for i in 0..random as u64 {
        let n = 3 + (i % 2) as usize;
        let s = seed + i;
        out.push((format!("1in3-random-n{n}-seed{s}"), gen_1in3(n, s).expect("n >= 3")));
    }
    out
}

/// The single clause (x ∨ y ∨ ¬z).
pub fn single_clause_3sat() -> Formula3Sat {
    Formula3Sat::new(3, vec![[Lit::pos(0), Lit::pos(1), Lit::neg(2)]])
}

/// Two triangles joined by a perfect matching.
pub fn prism() -> LabeledGraph {
    LabeledGraph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("valid edges")
}

pub fn petersen() -> LabeledGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    LabeledGraph::from_edges(10, &edges).expect("valid edges")
}

/// Named degree-{2,3} source graphs for the vertex replacement.
pub fn clawfree_sources() -> Vec<(String, LabeledGraph)> {
    vec![
        ("C4".into(), LabeledGraph::cycle(4)),
        ("C5".into(), LabeledGraph::cycle(5)),
        ("C6".into(), LabeledGraph::cycle(6)),
        ("C9".into(), LabeledGraph::cycle(9)),
        ("K4".into(), LabeledGraph::complete(4)),
        ("prism".into(), prism()),
    ]
}
