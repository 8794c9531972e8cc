//! Executable checks of the reduction claims against independent oracles,
//! reported as machine-readable verdicts.

mod claims;
pub mod corpus;
pub mod fixtures;
mod observations;
pub mod suites;

use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::cnf::{Assignment, FormulaDoc};
use crate::graph::{emit_graph6, LabeledGraph, VertexSet};

pub use claims::{
    verify_claim1, verify_claim2, verify_claim3, verify_claims45, verify_clawfree_observations, verify_fact1_theorem2,
    verify_subcubic_observations,
};
pub use observations::{
    check_clawfree_structure, check_obs1, check_obs2, check_obs3, check_obs4, check_obs_size4, check_p7_structure,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClaimId {
    Claim1,
    Claim2,
    Claim3,
    Claim4,
    Claim5,
    Fact1,
    Theorem2,
    HX10Bound,
    Obs1,
    Obs2,
    Obs3,
    Obs4,
    ObsSize4,
    P7Structure,
    ClawfreeStructure,
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Data that lets a failure be re-checked with the primitive operations
/// alone.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<FormulaDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_set: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Assignment>,
}

impl Counterexample {
    pub fn new(reason: impl Into<String>) -> Self {
        Counterexample {
            reason: reason.into(),
            ..Default::default()
        }
    }

    pub fn graph(mut self, g: &LabeledGraph) -> Self {
        self.graph6 = emit_graph6(g).ok();
        self
    }

    pub fn formula(mut self, f: FormulaDoc) -> Self {
        self.formula = Some(f);
        self
    }

    pub fn set(mut self, s: &VertexSet) -> Self {
        self.vertex_set = Some(s.clone());
        self
    }

    pub fn edge(mut self, e: (usize, usize)) -> Self {
        self.edge = Some([e.0, e.1]);
        self
    }

    pub fn assignment(mut self, a: &Assignment) -> Self {
        self.assignment = Some(a.clone());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail {
        counterexample: Box<Counterexample>,
    },
    Skipped {
        reason: String,
        #[serde(skip_serializing_if = "std::ops::Not::not")]
        budget_exceeded: bool,
    },
}

/// Errors that turn a verdict into `skipped`.
pub(crate) trait SkipCause: fmt::Display {
    fn is_budget(&self) -> bool {
        false
    }
}

impl SkipCause for crate::domination::SolveError {
    fn is_budget(&self) -> bool {
        matches!(self, crate::domination::SolveError::BudgetExceeded(_))
    }
}

impl SkipCause for crate::reductions::ReductionError {}
impl SkipCause for crate::cnf::CnfError {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimVerdict {
    pub claim: ClaimId,
    pub instance: String,
    #[serde(flatten)]
    pub outcome: Outcome,
    /// Observed quantities, such as γ values and oracle answers.
    #[serde(skip_serializing_if = "Value::is_null")]
    pub facts: Value,
}

impl ClaimVerdict {
    pub fn pass(claim: ClaimId, instance: impl Into<String>, facts: Value) -> Self {
        ClaimVerdict {
            claim,
            instance: instance.into(),
            outcome: Outcome::Pass,
            facts,
        }
    }

    pub fn fail(claim: ClaimId, instance: impl Into<String>, facts: Value, cx: Counterexample) -> Self {
        ClaimVerdict {
            claim,
            instance: instance.into(),
            outcome: Outcome::Fail {
                counterexample: Box::new(cx),
            },
            facts,
        }
    }

    pub fn skipped(claim: ClaimId, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        ClaimVerdict {
            claim,
            instance: instance.into(),
            outcome: Outcome::Skipped {
                reason: reason.into(),
                budget_exceeded: false,
            },
            facts: Value::Null,
        }
    }

    /// `skipped` because a search ran out of its node budget.
    pub fn skipped_budget(claim: ClaimId, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        ClaimVerdict {
            claim,
            instance: instance.into(),
            outcome: Outcome::Skipped {
                reason: reason.into(),
                budget_exceeded: true,
            },
            facts: Value::Null,
        }
    }

    pub(crate) fn skipped_on(claim: ClaimId, instance: &str, err: &dyn SkipCause) -> Self {
        if err.is_budget() {
            Self::skipped_budget(claim, instance, err.to_string())
        } else {
            Self::skipped(claim, instance, err.to_string())
        }
    }

    /// `pass` if `ok`, otherwise `fail` with the counterexample from `cx`.
    pub fn check(
        claim: ClaimId,
        instance: impl Into<String>,
        facts: Value,
        ok: bool,
        cx: impl FnOnce() -> Counterexample,
    ) -> Self {
        if ok {
            Self::pass(claim, instance, facts)
        } else {
            Self::fail(claim, instance, facts, cx())
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.outcome, Outcome::Fail { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.outcome, Outcome::Skipped { .. })
    }

    pub fn is_budget_skip(&self) -> bool {
        matches!(
            self.outcome,
            Outcome::Skipped {
                budget_exceeded: true,
                ..
            }
        )
    }
}

/// Verdict counts per claim.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// Counts per claim, ordered by claim id.
pub fn summarize(verdicts: &[ClaimVerdict]) -> Vec<(ClaimId, Tally)> {
    let mut map = std::collections::BTreeMap::<ClaimId, Tally>::new();
    for v in verdicts {
        let t = map.entry(v.claim).or_default();
        match v.outcome {
            Outcome::Pass => t.pass += 1,
            Outcome::Fail { .. } => t.fail += 1,
            Outcome::Skipped { .. } => t.skipped += 1,
        }
    }
    map.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn verdict_json_shape() {
        let v = ClaimVerdict::pass(ClaimId::Claim1, "fixture", json!({"gamma": 12}));
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"claim":"Claim1","instance":"fixture","status":"pass","facts":{"gamma":12}}"#
        );
        let f = ClaimVerdict::fail(
            ClaimId::Fact1,
            "P4",
            Value::Null,
            Counterexample::new("mismatch").edge((1, 2)),
        );
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"claim":"Fact1","instance":"P4","status":"fail","counterexample":{"reason":"mismatch","edge":[1,2]}}"#
        );
        let t = summarize(&[v, f]);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].0, ClaimId::Claim1);
    }
}
