//! Exact domination-number machinery for single-edge-contraction blockers.
//!
//! * [`graph`]: labeled simple graphs, contraction, claw / induced-path
//!   recognition, graph6 / edge-list JSON / DOT.
//! * [`domination`]: exact γ, minimum dominating set enumeration, the
//!   all-efficient / all-independent deciders and contraction blockers.
//! * [`cnf`]: 1-in-3 and 3-SAT formulas, brute-force oracles, generators,
//!   DIMACS and JSON.
//! * [`reductions`]: the subcubic, claw-free and `P_7`-free gadget
//!   constructions with their set/assignment converters.
//! * [`verify`]: executable checks of the reduction claims against
//!   independent oracles.
//!
//! ```
//! use domblocker::domination::{CtGamma, YesNo};
//! use domblocker::reductions::build_clawfree;
//! use domblocker::{LabeledGraph, Solver};
//!
//! let solver = Solver::default();
//! let c6 = LabeledGraph::cycle(6);
//! let report = solver.blocker_report(&c6).unwrap();
//! assert_eq!(report.gamma, 2);
//! assert_eq!(report.one_contraction, Some(YesNo::No));
//! assert_eq!(report.ct_gamma, Some(CtGamma::Contractions(3)));
//!
//! let (h, map) = build_clawfree(&c6).unwrap();
//! let gamma_h = solver.domination_number(&h).unwrap().gamma;
//! assert_eq!(gamma_h, report.gamma + map.gamma_shift());
//! ```

mod bits;
pub mod cnf;
pub mod domination;
pub mod graph;
pub mod reductions;
pub mod verify;

pub use domination::{
    domination_number, enumerate_minimum_dominating_sets, is_dominating, is_efficient, is_independent, GammaResult,
    SolveError, Solver,
};
pub use graph::{GraphError, LabeledGraph, VertexLabel, VertexSet};
