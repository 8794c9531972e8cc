//! Named verification suites over default or caller-supplied corpora.
//! Instances run in parallel; verdict order follows instance order.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::corpus::{
    all_sign_patterns, connected_graphs_up_to, random_connected_batch, random_degree23_batch, three_var_formulas,
};
use super::fixtures::{clawfree_sources, formulas_1in3};
use super::{
    verify_claim1, verify_claim2, verify_claim3, verify_claims45, verify_clawfree_observations, verify_fact1_theorem2,
    verify_subcubic_observations, ClaimVerdict,
};
use crate::cnf::{Formula1in3, Formula3Sat};
use crate::domination::Solver;
use crate::graph::{emit_graph6, LabeledGraph};

pub type Named<T> = (String, T);

/// Corpus sizes and seeds for the default suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Exhaustive connected graphs on `1..=max_n` vertices.
    pub max_n: usize,
    pub random_graphs: usize,
    pub random_graph_n: RangeInclusive<usize>,
    /// Generated 1-in-3 instances on top of the two fixed fixtures.
    pub random_formulas: usize,
    pub random_degree23: usize,
    pub degree23_n: RangeInclusive<usize>,
    pub seed: u64,
    /// Maximum minimum dominating sets inspected per instance by the
    /// observation sweeps.
    pub mds_limit: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 6,
            random_graphs: 200,
            random_graph_n: 7..=9,
            random_formulas: 10,
            random_degree23: 5,
            degree23_n: 4..=10,
            seed: 1,
            mds_limit: usize::MAX,
        }
    }
}

fn graph_name(prefix: &str, g: &LabeledGraph) -> String {
    format!("{prefix}:{}", emit_graph6(g).expect("small graph"))
}

/// Exhaustive small connected graphs followed by seeded random ones.
pub fn fact1_corpus(cfg: &SuiteConfig) -> Vec<Named<LabeledGraph>> {
    let exhaustive = connected_graphs_up_to(cfg.max_n)
        .into_iter()
        .map(|g| (graph_name("exhaustive", &g), g));
    let random = random_connected_batch(cfg.random_graphs, cfg.random_graph_n.clone(), cfg.seed)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("random{i}:{}", emit_graph6(&g).expect("small graph")), g));
    exhaustive.chain(random).collect()
}

pub fn formula_corpus_1in3(cfg: &SuiteConfig) -> Vec<Named<Formula1in3>> {
    formulas_1in3(cfg.random_formulas, cfg.seed)
}

/// The named claw-free sources followed by seeded random degree-{2,3}
/// graphs.
pub fn clawfree_corpus(cfg: &SuiteConfig) -> Vec<Named<LabeledGraph>> {
    let mut out = clawfree_sources();
    let random = random_degree23_batch(cfg.random_degree23, cfg.degree23_n.clone(), cfg.seed);
    out.extend(
        random
            .into_iter()
            .enumerate()
            .map(|(i, g)| (graph_name(&format!("deg23-{i}"), &g), g)),
    );
    out
}

/// Every 3-variable formula with at most 4 distinct full-width clauses,
/// then the unsatisfiable 8-pattern formula.
pub fn formula_corpus_3sat() -> Vec<Named<Formula3Sat>> {
    let mut out: Vec<Named<Formula3Sat>> = three_var_formulas(4)
        .into_iter()
        .map(|f| (format!("3var:{}", clause_list(&f)), f))
        .collect();
    out.push(("3var-all-sign-patterns".into(), all_sign_patterns()));
    out
}

/// Clauses as `1 2 -3/-1 2 3`, DIMACS literals.
fn clause_list(f: &Formula3Sat) -> String {
    f.clauses
        .iter()
        .map(|c| {
            c.iter()
                .map(|l| l.to_dimacs().to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("/")
}

pub fn run_fact1(solver: &Solver, graphs: &[Named<LabeledGraph>]) -> Vec<ClaimVerdict> {
    graphs
        .par_iter()
        .flat_map_iter(|(name, g)| verify_fact1_theorem2(solver, g, name))
        .collect()
}

pub fn run_claim1(solver: &Solver, formulas: &[Named<Formula1in3>]) -> Vec<ClaimVerdict> {
    formulas
        .par_iter()
        .map(|(name, f)| verify_claim1(solver, f, name))
        .collect()
}

pub fn run_claim2(solver: &Solver, formulas: &[Named<Formula1in3>]) -> Vec<ClaimVerdict> {
    formulas
        .par_iter()
        .map(|(name, f)| verify_claim2(solver, f, name))
        .collect()
}

pub fn run_claim3(solver: &Solver, graphs: &[Named<LabeledGraph>]) -> Vec<ClaimVerdict> {
    graphs
        .par_iter()
        .map(|(name, g)| verify_claim3(solver, g, name))
        .collect()
}

pub fn run_claims45(solver: &Solver, formulas: &[Named<Formula3Sat>]) -> Vec<ClaimVerdict> {
    formulas
        .par_iter()
        .flat_map_iter(|(name, f)| verify_claims45(solver, f, name))
        .collect()
}

/// Gadget-count sweeps over the minimum dominating sets of both the
/// 1-in-3 construction and the claw-free replacement.
pub fn run_observations(
    solver: &Solver,
    formulas: &[Named<Formula1in3>],
    graphs: &[Named<LabeledGraph>],
    mds_limit: usize,
) -> Vec<ClaimVerdict> {
    let mut out: Vec<ClaimVerdict> = formulas
        .par_iter()
        .flat_map_iter(|(name, f)| verify_subcubic_observations(solver, f, name, mds_limit))
        .collect();
    out.extend(
        graphs
            .par_iter()
            .flat_map_iter(|(name, g)| verify_clawfree_observations(solver, g, name, mds_limit))
            .collect::<Vec<_>>(),
    );
    out
}
