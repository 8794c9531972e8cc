//! Test corpora: exhaustive small graphs, seeded random graphs, and
//! small 3-CNF families.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{Formula3Sat, Lit};
use crate::graph::LabeledGraph;

/// Largest vertex count [`canonical_code`] supports (upper triangle fits
/// in 64 bits).
pub const MAX_CANONICAL_N: usize = 11;

/// Bits of the upper adjacency triangle, row-major, under `order`.
fn code_under(g: &LabeledGraph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

/// Isomorphism-invariant code: the maximum adjacency code over all
/// orderings that sort vertices by (degree, neighbor degree multiset).
/// Two graphs get the same code iff they are isomorphic.
pub fn canonical_code(g: &LabeledGraph) -> u64 {
    let n = g.n();
    assert!(
        n <= MAX_CANONICAL_N,
        "canonical_code supports at most {MAX_CANONICAL_N} vertices"
    );
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| key(v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in verts {
        match cells.last_mut() {
            Some(c) if key(c[0]) == key(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0;
    let mut order = Vec::with_capacity(n);
    search_cells(g, &mut cells, 0, &mut order, &mut best);
    best
}

fn search_cells(g: &LabeledGraph, cells: &mut [Vec<usize>], ci: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == cells.len() {
        *best = (*best).max(code_under(g, order));
        return;
    }
    let k = cells[ci].len();
    permute(cells, ci, 0, k, g, order, best);
}

fn permute(
    cells: &mut [Vec<usize>],
    ci: usize,
    start: usize,
    k: usize,
    g: &LabeledGraph,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if start == k {
        let len = order.len();
        order.extend_from_slice(&cells[ci]);
        search_cells(g, cells, ci + 1, order, best);
        order.truncate(len);
        return;
    }
    for i in start..k {
        cells[ci].swap(start, i);
        permute(cells, ci, start + 1, k, g, order, best);
        cells[ci].swap(start, i);
    }
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// connected or not, built by adding a vertex to every class on `n - 1`
/// vertices in every possible way. Sorted by canonical code.
pub fn all_graphs(n: usize) -> Vec<LabeledGraph> {
    assert!(n <= 8, "exhaustive enumeration is limited to 8 vertices");
    let mut level = vec![LabeledGraph::new(0)];
    for m in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (m - 1) {
                let mut h = g.clone();
                let v = h.add_vertex(Default::default());
                for w in 0..m - 1 {
                    if mask >> w & 1 == 1 {
                        h.add_edge(v, w).expect("fresh vertex");
                    }
                }
                let code = canonical_code(&h);
                if seen.insert(code) {
                    next.push((code, h));
                }
            }
        }
        next.sort_by_key(|(c, _)| *c);
        level = next.into_iter().map(|(_, h)| h).collect();
    }
    level
}

/// Connected representatives on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<LabeledGraph> {
    all_graphs(n).into_iter().filter(LabeledGraph::is_connected).collect()
}

/// Connected representatives on `1..=max_n` vertices, smallest first.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<LabeledGraph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// A random connected graph: a random spanning tree plus every other pair
/// independently with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> LabeledGraph {
    let mut g = LabeledGraph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]).expect("tree edge");
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("extra edge");
            }
        }
    }
    g
}

/// `count` random connected graphs with vertex counts drawn from
/// `n_range`, deterministic in `seed`.
pub fn random_connected_batch(count: usize, n_range: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<LabeledGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_range.clone());
            let p = rng.gen_range(0.1..0.6);
            random_connected(n, p, &mut rng)
        })
        .collect()
}

/// A random connected graph with all degrees in {2, 3}: a Hamiltonian
/// cycle in random order plus a random matching of chords.
pub fn random_degree23(n: usize, rng: &mut ChaCha8Rng) -> LabeledGraph {
    assert!(n >= 3, "need at least 3 vertices");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = LabeledGraph::new(n);
    for i in 0..n {
        g.add_edge(order[i], order[(i + 1) % n]).expect("cycle edge");
    }
    let mut free: Vec<usize> = (0..n).collect();
    free.shuffle(rng);
    let chords = rng.gen_range(0..=n / 2);
    let mut added = 0;
    while added < chords && free.len() >= 2 {
        let u = free.pop().expect("len checked");
        if let Some(i) = free.iter().position(|&v| !g.has_edge(u, v)) {
            let v = free.swap_remove(i);
            g.add_edge(u, v).expect("chord");
            added += 1;
        }
    }
    g
}

/// `count` random degree-{2,3} graphs with vertex counts from `n_range`.
pub fn random_degree23_batch(count: usize, n_range: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<LabeledGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_range.clone());
            random_degree23(n, &mut rng)
        })
        .collect()
}

/// The 8 sign patterns on variables 0, 1, 2 as clauses, pattern bit `v`
/// giving the sign of variable `v`.
pub fn sign_pattern_clause(mask: u8) -> [Lit; 3] {
    [0, 1, 2].map(|v| Lit {
        var: v,
        positive: mask >> v & 1 == 1,
    })
}

/// All formulas over 3 variables with between 1 and `max_clauses`
/// distinct clauses, each clause using all three variables.
pub fn three_var_formulas(max_clauses: usize) -> Vec<Formula3Sat> {
    (1u16..1 << 8)
        .filter(|s| (s.count_ones() as usize) <= max_clauses)
        .map(|s| {
            let clauses = (0..8u8).filter(|m| s >> m & 1 == 1).map(sign_pattern_clause).collect();
            Formula3Sat::new(3, clauses)
        })
        .collect()
}

/// Every sign pattern over 3 variables: unsatisfiable.
pub fn all_sign_patterns() -> Formula3Sat {
    Formula3Sat::new(3, (0..8).map(sign_pattern_clause).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(connected_graphs_up_to(6).len(), 143);
    }

    #[test]
    fn canonical_code_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let g = random_connected(7, 0.4, &mut rng);
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_code(&g), canonical_code(&g.permuted(&perm)));
        }
        assert_ne!(
            canonical_code(&LabeledGraph::path(4)),
            canonical_code(&LabeledGraph::star(3))
        );
    }

    #[test]
    fn random_graphs_have_requested_shape() {
        for g in random_connected_batch(30, 7..=9, 1) {
            assert!(g.is_connected() && (7..=9).contains(&g.n()));
        }
        for g in random_degree23_batch(30, 4..=10, 2) {
            assert!(g.is_connected());
            assert!((0..g.n()).all(|v| (2..=3).contains(&g.degree(v))));
        }
    }

    #[test]
    fn formula_family_sizes() {
        assert_eq!(three_var_formulas(4).len(), 8 + 28 + 56 + 70);
        assert_eq!(all_sign_patterns().clauses.len(), 8);
    }
}
