//! Single-contraction blocker decisions for the domination number.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{internal_edge, is_independent, SolveError, Solver};
use crate::graph::{LabeledGraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum YesNo {
    Yes,
    No,
}

impl From<bool> for YesNo {
    fn from(b: bool) -> Self {
        if b {
            YesNo::Yes
        } else {
            YesNo::No
        }
    }
}

/// Answer to "is every minimum dominating set P?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MdsVerdict {
    Yes,
    /// A minimum dominating set violating the property.
    No(VertexSet),
}

impl MdsVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, MdsVerdict::Yes)
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match self {
            MdsVerdict::Yes => None,
            MdsVerdict::No(w) => Some(w),
        }
    }
}

/// Can one edge contraction lower γ?
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contraction {
    Yes(usize, usize),
    No,
}

impl Contraction {
    pub fn is_yes(&self) -> bool {
        matches!(self, Contraction::Yes(..))
    }

    pub fn edge(&self) -> Option<(usize, usize)> {
        match *self {
            Contraction::Yes(u, v) => Some((u, v)),
            Contraction::No => None,
        }
    }
}

/// Minimum number of contractions lowering γ, if at most `max_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtGamma {
    Contractions(usize),
    Impossible,
}

impl fmt::Display for CtGamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CtGamma::Contractions(k) => write!(f, "{k}"),
            CtGamma::Impossible => write!(f, "impossible"),
        }
    }
}

impl Serialize for CtGamma {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CtGamma::Contractions(k) => s.serialize_u64(*k as u64),
            CtGamma::Impossible => s.serialize_str("impossible"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mds: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contraction_edge: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_efficient_mds: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_independent_mds: Option<VertexSet>,
}

/// Everything the blocker deciders know about one graph. Fields that were
/// not requested are `None` and omitted from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockerReport {
    pub gamma: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_contraction: Option<YesNo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_efficient: Option<YesNo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_independent: Option<YesNo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ct_gamma: Option<CtGamma>,
    pub witnesses: Witnesses,
}

impl Solver {
    fn require_connected(g: &LabeledGraph) -> Result<(), SolveError> {
        if g.is_empty() {
            Err(SolveError::EmptyGraph)
        } else if !g.is_connected() {
            Err(SolveError::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Decides whether one contraction lowers γ by looking for a minimum
    /// dominating set that is not independent: contracting one of its
    /// internal edges merges two members into one.
    pub fn one_contraction_decision(&self, g: &LabeledGraph) -> Result<Contraction, SolveError> {
        Self::require_connected(g)?;
        let gamma = self.domination_number(g)?.gamma;
        if gamma == 1 {
            return Ok(Contraction::No);
        }
        Ok(match self.first_mds_failing(g, gamma, is_independent)? {
            super::MdsVerdict::Yes => Contraction::No,
            super::MdsVerdict::No(d) => {
                let (u, v) = internal_edge(g, &d).expect("non-independent set has an edge");
                Contraction::Yes(u, v)
            }
        })
    }

    /// Ground truth: contract every edge and compare domination numbers.
    /// The witness is the lowest such edge.
    pub fn one_contraction_definitional(&self, g: &LabeledGraph) -> Result<Contraction, SolveError> {
        Self::require_connected(g)?;
        let gamma = self.domination_number(g)?.gamma;
        if gamma == 1 {
            return Ok(Contraction::No);
        }
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let lowers = |&(u, v): &(usize, usize)| -> Result<bool, SolveError> {
            let h = g.contract_edge(u, v).expect("edge of g");
            self.has_dominating_set_within(&h, gamma - 1)
        };
        let hit = if self.parallel {
            let results: Vec<Result<bool, SolveError>> = edges.par_iter().map(lowers).collect();
            first_true(results)?
        } else {
            first_true(edges.iter().map(lowers))?
        };
        Ok(match hit {
            Some(i) => Contraction::Yes(edges[i].0, edges[i].1),
            None => Contraction::No,
        })
    }

    /// Minimum number of successive contractions (at most `max_k ≤ 3`)
    /// that lower γ, by exhaustive search over contraction sequences.
    pub fn ct_gamma(&self, g: &LabeledGraph, max_k: usize) -> Result<CtGamma, SolveError> {
        if !(1..=3).contains(&max_k) {
            return Err(SolveError::BadMaxK(max_k));
        }
        Self::require_connected(g)?;
        let gamma = self.domination_number(g)?.gamma;
        if gamma == 1 {
            return Ok(CtGamma::Impossible);
        }
        let mut frontier = vec![strip_labels(g)];
        for k in 1..=max_k {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for h in &frontier {
                for (u, v) in h.edges() {
                    let c = h.contract_edge(u, v).expect("edge of h");
                    if seen.insert(c.clone()) {
                        next.push(c);
                    }
                }
            }
            let lowers = |h: &LabeledGraph| self.has_dominating_set_within(h, gamma - 1);
            let hit = if self.parallel {
                let results: Vec<_> = next.par_iter().map(lowers).collect();
                first_true(results)?
            } else {
                first_true(next.iter().map(lowers))?
            };
            if hit.is_some() {
                return Ok(CtGamma::Contractions(k));
            }
            frontier = next;
        }
        Ok(CtGamma::Impossible)
    }

    /// Every blocker verdict for a connected graph.
    pub fn blocker_report(&self, g: &LabeledGraph) -> Result<BlockerReport, SolveError> {
        Self::require_connected(g)?;
        let gr = self.domination_number(g)?;
        let eff = self.first_mds_failing(g, gr.gamma, super::is_efficient)?;
        let ind = self.first_mds_failing(g, gr.gamma, is_independent)?;
        let one = if gr.gamma == 1 {
            Contraction::No
        } else {
            match ind.witness() {
                Some(d) => {
                    let (u, v) = internal_edge(g, d).expect("non-independent set has an edge");
                    Contraction::Yes(u, v)
                }
                None => Contraction::No,
            }
        };
        let ct = self.ct_gamma(g, 3)?;
        Ok(BlockerReport {
            gamma: gr.gamma,
            one_contraction: Some(one.is_yes().into()),
            all_efficient: Some(eff.is_yes().into()),
            all_independent: Some(ind.is_yes().into()),
            ct_gamma: Some(ct),
            witnesses: Witnesses {
                mds: Some(gr.witness),
                contraction_edge: one.edge().map(|(u, v)| [u, v]),
                non_efficient_mds: eff.witness().cloned(),
                non_independent_mds: ind.witness().cloned(),
            },
        })
    }
}

fn strip_labels(g: &LabeledGraph) -> LabeledGraph {
    let edges: Vec<_> = g.edges().collect();
    LabeledGraph::from_edges(g.n(), &edges).expect("edges of g")
}

fn first_true<I>(results: I) -> Result<Option<usize>, SolveError>
where
    I: IntoIterator<Item = Result<bool, SolveError>>,
{
    for (i, r) in results.into_iter().enumerate() {
        if r? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solvers() -> [Solver; 2] {
        [Solver::default(), Solver::default().canonical()]
    }

    #[test]
    fn p4_one_contraction() {
        let p4 = LabeledGraph::path(4);
        for s in solvers() {
            assert_eq!(s.one_contraction_definitional(&p4).unwrap(), Contraction::Yes(0, 1));
            // canonical first non-independent MDS of P_4 is {1, 2}
            assert_eq!(s.one_contraction_decision(&p4).unwrap(), Contraction::Yes(1, 2));
            assert_eq!(s.ct_gamma(&p4, 3).unwrap(), CtGamma::Contractions(1));
        }
    }

    #[test]
    fn c6_needs_three() {
        let c6 = LabeledGraph::cycle(6);
        for s in solvers() {
            assert_eq!(s.one_contraction_decision(&c6).unwrap(), Contraction::No);
            assert_eq!(s.one_contraction_definitional(&c6).unwrap(), Contraction::No);
            assert_eq!(s.ct_gamma(&c6, 3).unwrap(), CtGamma::Contractions(3));
            assert_eq!(s.ct_gamma(&c6, 2).unwrap(), CtGamma::Impossible);
        }
    }

    #[test]
    fn c9_single_contraction_never_helps() {
        let s = Solver::default();
        let c9 = LabeledGraph::cycle(9);
        assert_eq!(s.one_contraction_definitional(&c9).unwrap(), Contraction::No);
        assert_eq!(s.one_contraction_decision(&c9).unwrap(), Contraction::No);
    }

    #[test]
    fn gamma_one_is_a_no_instance() {
        let s = Solver::default();
        let k4 = LabeledGraph::complete(4);
        assert_eq!(s.one_contraction_decision(&k4).unwrap(), Contraction::No);
        assert_eq!(
            s.one_contraction_definitional(&LabeledGraph::complete(3)).unwrap(),
            Contraction::No
        );
        assert_eq!(s.ct_gamma(&k4, 3).unwrap(), CtGamma::Impossible);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = LabeledGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = Solver::default();
        assert_eq!(s.one_contraction_decision(&g), Err(SolveError::Disconnected));
        assert_eq!(s.one_contraction_definitional(&g), Err(SolveError::Disconnected));
        assert_eq!(s.ct_gamma(&g, 3), Err(SolveError::Disconnected));
        assert_eq!(s.ct_gamma(&LabeledGraph::path(3), 4), Err(SolveError::BadMaxK(4)));
    }

    #[test]
    fn report_json() {
        let r = Solver::default()
            .canonical()
            .blocker_report(&LabeledGraph::cycle(6))
            .unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"gamma":2,"one_contraction":"no","all_efficient":"yes","all_independent":"yes","ct_gamma":3,"witnesses":{"mds":[0,3]}}"#
        );
        let r = Solver::default().blocker_report(&LabeledGraph::path(4)).unwrap();
        assert_eq!(r.one_contraction, Some(YesNo::Yes));
        assert_eq!(r.all_independent, Some(YesNo::No));
        assert_eq!(r.witnesses.contraction_edge, Some([1, 2]));
    }
}
