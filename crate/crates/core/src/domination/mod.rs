//! Exact domination number, minimum dominating set enumeration, and the
//! contraction-blocker deciders built on them.

mod blocker;
pub(crate) mod cover;
mod enumerate;

use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::bits::Bits;
use crate::graph::{LabeledGraph, VertexSet};
use cover::{CoverSearch, OutOfBudget};

pub use blocker::{BlockerReport, Contraction, CtGamma, MdsVerdict, Witnesses, YesNo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("search exceeded the node budget of {0}")]
    BudgetExceeded(u64),
    #[error("max_k must be between 1 and 3, got {0}")]
    BadMaxK(usize),
}

/// `true` iff every vertex is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &LabeledGraph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| s.contains(v) || g.neighbors(v).iter().any(|&w| s.contains(w)))
}

/// `true` iff no two members of `s` are adjacent.
pub fn is_independent(g: &LabeledGraph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).iter().all(|&w| !s.contains(w)))
}

/// `true` iff every closed neighborhood meets `s` in exactly one vertex.
pub fn is_efficient(g: &LabeledGraph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| {
        let own = s.contains(v) as usize;
        own + g.neighbors(v).iter().filter(|&&w| s.contains(w)).count() == 1
    })
}

/// The lowest edge `(u, v)`, `u < v`, with both endpoints in `s`.
pub fn internal_edge(g: &LabeledGraph, s: &VertexSet) -> Option<(usize, usize)> {
    s.iter().find_map(|u| {
        g.neighbors(u)
            .iter()
            .find(|&&v| v > u && s.contains(v))
            .map(|&v| (u, v))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    pub gamma: usize,
    pub witness: VertexSet,
}

pub(crate) fn closed_neighborhoods(g: &LabeledGraph) -> Vec<Bits> {
    (0..g.n())
        .map(|v| {
            let mut b = Bits::new(g.n());
            b.insert(v);
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect()
}

/// Entry point for all exact queries.
///
/// `budget` caps the number of search nodes per exact solve (each γ
/// computation or enumeration run). `parallel` lets the contraction
/// oracles fan out over edges on the current rayon pool; answers are the
/// same either way.
#[derive(Debug, Clone, Copy)]
pub struct Solver {
    pub budget: Option<u64>,
    pub parallel: bool,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            budget: None,
            parallel: true,
        }
    }
}

impl Solver {
    pub fn with_budget(budget: u64) -> Self {
        Solver {
            budget: Some(budget),
            ..Self::default()
        }
    }

    /// Single-threaded, deterministic witness mode.
    pub fn canonical(self) -> Self {
        Solver {
            parallel: false,
            ..self
        }
    }

    fn node_budget(&self) -> u64 {
        self.budget.unwrap_or(u64::MAX)
    }

    fn out_of_budget(&self, _: OutOfBudget) -> SolveError {
        SolveError::BudgetExceeded(self.node_budget())
    }

    /// Exact domination number with a minimum dominating set.
    pub fn domination_number(&self, g: &LabeledGraph) -> Result<GammaResult, SolveError> {
        if g.is_empty() {
            return Err(SolveError::EmptyGraph);
        }
        let n = g.n();
        let closed = closed_neighborhoods(g);
        let mut search = CoverSearch::new(&closed, self.node_budget());
        let all = Bits::full(n);
        let greedy = search.greedy(&all, &all).expect("V dominates itself");
        let picks = match search
            .solve(all.clone(), all, greedy.len() - 1)
            .map_err(|e| self.out_of_budget(e))?
        {
            Some(better) => better,
            None => greedy,
        };
        let witness = VertexSet::from_members(n, picks).expect("picks are vertices");
        Ok(GammaResult {
            gamma: witness.len(),
            witness,
        })
    }

    /// Whether `g` has a dominating set with at most `k` vertices.
    pub fn has_dominating_set_within(&self, g: &LabeledGraph, k: usize) -> Result<bool, SolveError> {
        if g.is_empty() {
            return Ok(true);
        }
        let closed = closed_neighborhoods(g);
        let mut search = CoverSearch::new(&closed, self.node_budget());
        let all = Bits::full(g.n());
        search
            .solve(all.clone(), all, k)
            .map(|r| r.is_some())
            .map_err(|e| self.out_of_budget(e))
    }

    /// Visits every minimum dominating set exactly once, in lexicographic
    /// order of the ascending member lists. `gamma` may be supplied if it
    /// is already known. Returns `Break` if the visitor stopped early.
    pub fn enumerate_minimum_dominating_sets<F>(
        &self,
        g: &LabeledGraph,
        gamma: Option<usize>,
        visit: F,
    ) -> Result<ControlFlow<()>, SolveError>
    where
        F: FnMut(&VertexSet) -> ControlFlow<()>,
    {
        let gamma = match gamma {
            Some(k) => k,
            None => self.domination_number(g)?.gamma,
        };
        enumerate::run(g, gamma, self.node_budget(), visit).map_err(|e| self.out_of_budget(e))
    }

    /// All minimum dominating sets, in canonical order.
    pub fn all_minimum_dominating_sets(&self, g: &LabeledGraph) -> Result<Vec<VertexSet>, SolveError> {
        let mut out = Vec::new();
        let _ = self.enumerate_minimum_dominating_sets(g, None, |s| {
            out.push(s.clone());
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    /// The first minimum dominating set (canonical order) failing `pred`.
    fn first_mds_failing<P>(&self, g: &LabeledGraph, gamma: usize, pred: P) -> Result<MdsVerdict, SolveError>
    where
        P: Fn(&LabeledGraph, &VertexSet) -> bool,
    {
        let mut witness = None;
        let _ = self.enumerate_minimum_dominating_sets(g, Some(gamma), |s| {
            if pred(g, s) {
                ControlFlow::Continue(())
            } else {
                witness = Some(s.clone());
                ControlFlow::Break(())
            }
        })?;
        Ok(match witness {
            Some(w) => MdsVerdict::No(w),
            None => MdsVerdict::Yes,
        })
    }

    /// Is every minimum dominating set efficient?
    pub fn all_efficient_md(&self, g: &LabeledGraph) -> Result<MdsVerdict, SolveError> {
        let gamma = self.domination_number(g)?.gamma;
        self.first_mds_failing(g, gamma, is_efficient)
    }

    /// Is every minimum dominating set independent?
    pub fn all_independent_md(&self, g: &LabeledGraph) -> Result<MdsVerdict, SolveError> {
        let gamma = self.domination_number(g)?.gamma;
        self.first_mds_failing(g, gamma, is_independent)
    }
}

/// [`Solver::domination_number`] with no budget.
pub fn domination_number(g: &LabeledGraph) -> GammaResult {
    Solver::default()
        .domination_number(g)
        .expect("unbounded solve of a non-empty graph")
}

/// Collects every minimum dominating set with no budget.
pub fn enumerate_minimum_dominating_sets(g: &LabeledGraph) -> Vec<VertexSet> {
    Solver::default()
        .all_minimum_dominating_sets(g)
        .expect("unbounded enumeration of a non-empty graph")
}
