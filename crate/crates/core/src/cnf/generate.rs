//! Seeded random instance generators.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CnfError, Formula1in3, Formula3Sat, Lit};

const MAX_ATTEMPTS: usize = 200;

fn has_repeat(c: &[usize]) -> bool {
    c[0] == c[1] || c[0] == c[2] || c[1] == c[2]
}

/// Swaps repeated occurrences into other clauses until every clause has
/// three distinct variables. Gives up after a bounded number of swaps.
fn repair(slots: &mut [usize], rng: &mut ChaCha8Rng) -> bool {
    let m = slots.len() / 3;
    for _ in 0..64 * slots.len() {
        let Some(bad) = (0..m).find(|&i| has_repeat(&slots[3 * i..3 * i + 3])) else {
            return true;
        };
        let p = 3 * bad + if slots[3 * bad] == slots[3 * bad + 1] { 1 } else { 2 };
        let q = rng.gen_range(0..slots.len());
        if q / 3 == bad {
            continue;
        }
        slots.swap(p, q);
        let other = q / 3;
        if has_repeat(&slots[3 * other..3 * other + 3]) {
            slots.swap(p, q);
        }
    }
    false
}

fn incidence_connected(num_vars: usize, triples: &[[usize; 3]]) -> bool {
    let mut parent: Vec<usize> = (0..num_vars).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = num_vars;
    for t in triples {
        for &y in &t[1..] {
            let (a, b) = (find(&mut parent, t[0]), find(&mut parent, y));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
    }
    comps == 1
}

/// A random valid 1-in-3 instance on `num_vars` variables whose
/// variable-clause incidence graph is connected, so the reductions built
/// from it are connected graphs.
pub fn gen_1in3(num_vars: usize, seed: u64) -> Result<Formula1in3, CnfError> {
    if num_vars < 3 {
        return Err(CnfError::TooFewVariables(num_vars));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut slots: Vec<usize> = (0..num_vars).flat_map(|v| [v; 3]).collect();
        slots.shuffle(&mut rng);
        if !repair(&mut slots, &mut rng) {
            continue;
        }
        let triples: Vec<[usize; 3]> = slots
            .chunks(3)
            .map(|c| {
                let mut t = [c[0], c[1], c[2]];
                t.sort_unstable();
                t
            })
            .collect();
        if incidence_connected(num_vars, &triples) {
            return Ok(Formula1in3::from_triples(num_vars, &triples));
        }
    }
    Err(CnfError::GenerationFailed(MAX_ATTEMPTS))
}

/// A random 3-SAT instance: each clause draws three distinct variables
/// and independent signs.
pub fn gen_3sat(num_vars: usize, num_clauses: usize, seed: u64) -> Result<Formula3Sat, CnfError> {
    if num_vars < 3 {
        return Err(CnfError::TooFewVariables(num_vars));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..num_clauses)
        .map(|_| {
            let v = index::sample(&mut rng, num_vars, 3).into_vec();
            let mut vars = [v[0], v[1], v[2]];
            vars.sort_unstable();
            vars.map(|v| Lit {
                var: v,
                positive: rng.gen_bool(0.5),
            })
        })
        .collect();
    Ok(Formula3Sat::new(num_vars, clauses))
}
