//! 1-in-3 SAT to a subcubic graph.
//!
//! Each variable becomes a 9-cycle in cyclic order
//! `u^3, F^2, T^2, u^2, F^1, T^1, u^1, F^3, T^3`. Each clause becomes an
//! isolated clause vertex `c`, three variable vertices `x_j`, and a
//! triangle of l-vertices with `x_j ~ l_j`. The i-th occurrence of `x`
//! (clauses in index order) is wired by `x_j ~ F_x^i` and `c ~ T_x^i`.

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::cnf::{Assignment, Formula1in3};
use crate::graph::{LabeledGraph, VertexLabel, VertexSet};

/// Offsets of `u^i`, `F^i`, `T^i` (i = 1, 2, 3) within a variable's cycle.
const U_AT: [usize; 3] = [6, 3, 0];
const F_AT: [usize; 3] = [4, 1, 7];
const T_AT: [usize; 3] = [5, 2, 8];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableGadget {
    /// `T_x^1..3`.
    pub t: [usize; 3],
    /// `F_x^1..3`.
    pub f: [usize; 3],
    /// `u_x^1..3`.
    pub u: [usize; 3],
}

impl VariableGadget {
    /// All nine cycle vertices.
    pub fn vertices(&self) -> [usize; 9] {
        let (t, f, u) = (self.t, self.f, self.u);
        [t[0], t[1], t[2], f[0], f[1], f[2], u[0], u[1], u[2]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseGadget {
    pub clause_vertex: usize,
    /// The clause's variables in clause order.
    pub vars: [usize; 3],
    pub variable_vertices: [usize; 3],
    pub l_vertices: [usize; 3],
    /// Occurrence index `i` (1-based) of `vars[j]` in this clause: the
    /// wiring uses `F^i` and `T^i`.
    pub occurrence: [u8; 3],
}

impl ClauseGadget {
    pub fn vertices(&self) -> [usize; 7] {
        let (x, l) = (self.variable_vertices, self.l_vertices);
        [self.clause_vertex, x[0], x[1], x[2], l[0], l[1], l[2]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcubicReductionMap {
    pub num_vars: usize,
    pub clauses: Vec<[usize; 3]>,
    pub variables: Vec<VariableGadget>,
    pub clause_gadgets: Vec<ClauseGadget>,
    /// Vertex count of the built graph.
    pub n: usize,
}

impl SubcubicReductionMap {
    /// `3|X| + |C|`: γ of the built graph when the formula is satisfiable.
    pub fn satisfiable_gamma(&self) -> usize {
        3 * self.num_vars + self.clauses.len()
    }

    fn formula(&self) -> Formula1in3 {
        Formula1in3::from_triples(self.num_vars, &self.clauses)
    }
}

/// Builds the graph and its map. The graph is connected iff the formula's
/// variable-clause incidence is connected.
pub fn build_subcubic(f: &Formula1in3) -> Result<(LabeledGraph, SubcubicReductionMap), ReductionError> {
    f.validate().map_err(ReductionError::InvalidFormula)?;
    let nx = f.num_vars;
    let triples = f.triples();
    let mut g = LabeledGraph::new(0);

    let mut variables = Vec::with_capacity(nx);
    for x in 0..nx {
        let base = g.n();
        let mut labels = [VertexLabel::Plain; 9];
        for i in 0..3 {
            let index = i as u8 + 1;
            labels[U_AT[i]] = VertexLabel::CycleU { var: x, index };
            labels[F_AT[i]] = VertexLabel::FalseVertex { var: x, index };
            labels[T_AT[i]] = VertexLabel::TrueVertex { var: x, index };
        }
        for l in labels {
            g.add_vertex(l);
        }
        for k in 0..9 {
            g.add_edge(base + k, base + (k + 1) % 9).expect("cycle edge");
        }
        variables.push(VariableGadget {
            t: T_AT.map(|o| base + o),
            f: F_AT.map(|o| base + o),
            u: U_AT.map(|o| base + o),
        });
    }

    let mut next_occ = vec![0u8; nx];
    let mut clause_gadgets = Vec::with_capacity(triples.len());
    for (ci, &vars) in triples.iter().enumerate() {
        let c = g.add_vertex(VertexLabel::ClauseVertex { clause: ci });
        let xs = vars.map(|var| g.add_vertex(VertexLabel::VariableVertex { clause: ci, var }));
        let ls = vars.map(|var| g.add_vertex(VertexLabel::LVertex { clause: ci, var }));
        for j in 0..3 {
            g.add_edge(ls[j], ls[(j + 1) % 3]).expect("triangle edge");
            g.add_edge(xs[j], ls[j]).expect("pendant edge");
        }
        let occurrence = vars.map(|x| {
            next_occ[x] += 1;
            next_occ[x]
        });
        for j in 0..3 {
            let gx = &variables[vars[j]];
            let i = occurrence[j] as usize - 1;
            g.add_edge(xs[j], gx.f[i]).expect("false wiring");
            g.add_edge(c, gx.t[i]).expect("true wiring");
        }
        clause_gadgets.push(ClauseGadget {
            clause_vertex: c,
            vars,
            variable_vertices: xs,
            l_vertices: ls,
            occurrence,
        });
    }

    let map = SubcubicReductionMap {
        num_vars: nx,
        clauses: triples,
        variables,
        clause_gadgets,
        n: g.n(),
    };
    Ok((g, map))
}

/// The dominating set built from a satisfying assignment: the T-triple of
/// every true variable, the F-triple of every false one, and per clause the
/// l-vertex of its true variable. Size `3|X| + |C|`, efficient.
pub fn assignment_to_mds_subcubic(map: &SubcubicReductionMap, a: &Assignment) -> Result<VertexSet, ReductionError> {
    if a.len() != map.num_vars {
        return Err(ReductionError::AssignmentLength {
            expected: map.num_vars,
            found: a.len(),
        });
    }
    if !map.formula().is_satisfied_by(a) {
        return Err(ReductionError::NotSatisfying);
    }
    let mut d = VertexSet::empty(map.n);
    for (x, gx) in map.variables.iter().enumerate() {
        for v in if a.value(x) { gx.t } else { gx.f } {
            d.insert(v);
        }
    }
    for cg in &map.clause_gadgets {
        let j = (0..3)
            .find(|&j| a.value(cg.vars[j]))
            .expect("exactly one true variable");
        d.insert(cg.l_vertices[j]);
    }
    Ok(d)
}

/// Reads an assignment off a minimum dominating set of size `3|X| + |C|`:
/// `x` is true iff all of `T_x^1..3` are in the set.
pub fn mds_to_assignment_subcubic(map: &SubcubicReductionMap, d: &VertexSet) -> Result<Assignment, ReductionError> {
    if d.universe() != map.n {
        return Err(ReductionError::UniverseMismatch {
            expected: map.n,
            found: d.universe(),
        });
    }
    let expected = map.satisfiable_gamma();
    if d.len() != expected {
        return Err(ReductionError::WrongSize {
            expected,
            found: d.len(),
        });
    }
    let a = Assignment(map.variables.iter().map(|gx| d.count_in(&gx.t) == 3).collect());
    if map.formula().is_satisfied_by(&a) {
        Ok(a)
    } else {
        Err(ReductionError::NotSatisfying)
    }
}
