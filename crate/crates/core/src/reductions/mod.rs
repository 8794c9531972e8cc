//! Gadget compilers from the source problems to domination instances,
//! with converters between certificates on both sides.
//!
//! * [`build_subcubic`]: positive exactly-3-bounded 1-in-3 SAT to a
//!   subcubic graph whose minimum dominating sets are all efficient iff the
//!   formula is satisfiable.
//! * [`build_clawfree`]: replaces every vertex of a degree-{2,3} graph by a
//!   claw-free gadget, shifting γ by a known amount.
//! * [`build_p7free`]: 3-SAT to a P7-free graph whose minimum dominating
//!   sets are all independent iff the formula is satisfiable.

mod clawfree;
mod p7free;
mod subcubic;

use thiserror::Error;

use crate::cnf::Violation;

pub use clawfree::{
    build_clawfree, lift_dominating_set, project_dominating_set, ClawfreeReductionMap, GadgetKind, VertexGadget,
};
pub use p7free::{assignment_to_mds_p7, build_p7free, mds_to_assignment_p7, LiteralTriangle, P7ReductionMap};
pub use subcubic::{
    assignment_to_mds_subcubic, build_subcubic, mds_to_assignment_subcubic, ClauseGadget, SubcubicReductionMap,
    VariableGadget,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("invalid formula: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    InvalidFormula(Vec<Violation>),
    #[error("formula has no variables")]
    EmptyFormula,
    #[error("variable {0} occurs in no clause, so the graph would be disconnected")]
    UnusedVariable(usize),
    #[error("source graph has no vertices")]
    EmptyGraph,
    #[error("source graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} has degree {degree}, expected 2 or 3")]
    BadDegree { vertex: usize, degree: usize },
    #[error("assignment has {found} values, formula has {expected} variables")]
    AssignmentLength { expected: usize, found: usize },
    #[error("assignment does not satisfy the formula")]
    NotSatisfying,
    #[error("vertex set is over {found} vertices, graph has {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("vertex set has {found} members, expected {expected}")]
    WrongSize { expected: usize, found: usize },
    #[error("vertex set does not dominate the graph (vertex {0} is undominated)")]
    NotDominating(usize),
    #[error("gadget of source vertex {source_vertex} holds {count} members, expected {allowed:?}")]
    GadgetCount {
        source_vertex: usize,
        count: usize,
        allowed: [usize; 2],
    },
}
