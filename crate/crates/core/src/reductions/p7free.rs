//! 3-SAT to a P7-free graph: a triangle `{x, ~x, u_x}` per variable, a
//! clique on the clause vertices, and an edge from each clause vertex to
//! the literal vertices of its literals.

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::cnf::{Assignment, Formula3Sat, Lit};
use crate::graph::{LabeledGraph, VertexLabel, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteralTriangle {
    pub pos: usize,
    pub neg: usize,
    pub u: usize,
}

impl LiteralTriangle {
    pub fn literal(&self, positive: bool) -> usize {
        if positive {
            self.pos
        } else {
            self.neg
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct P7ReductionMap {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Lit>>,
    pub variables: Vec<LiteralTriangle>,
    pub clause_vertices: Vec<usize>,
    /// Vertex count of the built graph.
    pub n: usize,
}

impl P7ReductionMap {
    /// The clause clique.
    pub fn clique(&self) -> &[usize] {
        &self.clause_vertices
    }

    fn formula(&self) -> Formula3Sat {
        Formula3Sat {
            num_vars: self.num_vars,
            clauses: self.clauses.clone(),
        }
    }
}

/// Builds the graph and its map. Every variable must occur in some clause
/// so that the graph is connected.
pub fn build_p7free(f: &Formula3Sat) -> Result<(LabeledGraph, P7ReductionMap), ReductionError> {
    f.validate().map_err(ReductionError::InvalidFormula)?;
    if f.num_vars == 0 {
        return Err(ReductionError::EmptyFormula);
    }
    let mut used = vec![false; f.num_vars];
    for l in f.clauses.iter().flatten() {
        used[l.var] = true;
    }
    if let Some(x) = used.iter().position(|&u| !u) {
        return Err(ReductionError::UnusedVariable(x));
    }

    let mut g = LabeledGraph::new(0);
    let variables: Vec<LiteralTriangle> = (0..f.num_vars)
        .map(|var| {
            let t = LiteralTriangle {
                pos: g.add_vertex(VertexLabel::PosLiteral { var }),
                neg: g.add_vertex(VertexLabel::NegLiteral { var }),
                u: g.add_vertex(VertexLabel::TriangleU { var }),
            };
            for (a, b) in [(t.pos, t.neg), (t.neg, t.u), (t.pos, t.u)] {
                g.add_edge(a, b).expect("triangle edge");
            }
            t
        })
        .collect();
    let clause_vertices: Vec<usize> = (0..f.clauses.len())
        .map(|clause| g.add_vertex(VertexLabel::ClauseVertex { clause }))
        .collect();
    for (i, &c) in clause_vertices.iter().enumerate() {
        for &d in &clause_vertices[i + 1..] {
            g.add_edge(c, d).expect("clique edge");
        }
        for l in &f.clauses[i] {
            g.add_edge(c, variables[l.var].literal(l.positive))
                .expect("literal edge");
        }
    }
    let map = P7ReductionMap {
        num_vars: f.num_vars,
        clauses: f.clauses.clone(),
        variables,
        clause_vertices,
        n: g.n(),
    };
    Ok((g, map))
}

/// One literal vertex per variable, `x` if true and `~x` if false.
pub fn assignment_to_mds_p7(map: &P7ReductionMap, a: &Assignment) -> Result<VertexSet, ReductionError> {
    if a.len() != map.num_vars {
        return Err(ReductionError::AssignmentLength {
            expected: map.num_vars,
            found: a.len(),
        });
    }
    if !map.formula().is_satisfied_by(a) {
        return Err(ReductionError::NotSatisfying);
    }
    let members = map.variables.iter().enumerate().map(|(x, t)| t.literal(a.value(x)));
    Ok(VertexSet::from_members(map.n, members).expect("literal ids are vertices"))
}

/// Reads an assignment off a dominating set of size `|X|`: `x` is true iff
/// its positive literal vertex is a member.
pub fn mds_to_assignment_p7(map: &P7ReductionMap, d: &VertexSet) -> Result<Assignment, ReductionError> {
    if d.universe() != map.n {
        return Err(ReductionError::UniverseMismatch {
            expected: map.n,
            found: d.universe(),
        });
    }
    if d.len() != map.num_vars {
        return Err(ReductionError::WrongSize {
            expected: map.num_vars,
            found: d.len(),
        });
    }
    let a = Assignment(map.variables.iter().map(|t| d.contains(t.pos)).collect());
    if map.formula().is_satisfied_by(&a) {
        Ok(a)
    } else {
        Err(ReductionError::NotSatisfying)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{domination_number, is_dominating};
    use crate::graph::{is_pk_free, PathSearch};

    fn single() -> Formula3Sat {
        Formula3Sat::new(3, vec![[Lit::pos(0), Lit::pos(1), Lit::neg(2)]])
    }

    #[test]
    fn single_clause() {
        let (g, map) = build_p7free(&single()).unwrap();
        assert_eq!(g.n(), 10);
        assert!(g.is_connected());
        assert_eq!(is_pk_free(&g, 7, 1_000_000), PathSearch::Free);
        assert_eq!(domination_number(&g).gamma, 3);
        let c = map.clause_vertices[0];
        assert_eq!(g.neighbors(c), &[0, 3, 7]);

        let a = Assignment(vec![true, false, false]);
        let d = assignment_to_mds_p7(&map, &a).unwrap();
        assert_eq!(d.to_vec(), vec![0, 4, 7]);
        assert!(is_dominating(&g, &d));
        assert_eq!(mds_to_assignment_p7(&map, &d).unwrap(), a);
        assert_eq!(
            mds_to_assignment_p7(&map, &VertexSet::from_members(10, [0, 3]).unwrap()),
            Err(ReductionError::WrongSize { expected: 3, found: 2 })
        );
    }

    #[test]
    fn disjoint_clauses_connect_through_the_clique() {
        let f = Formula3Sat::new(
            6,
            vec![
                [Lit::pos(0), Lit::pos(1), Lit::pos(2)],
                [Lit::neg(3), Lit::neg(4), Lit::neg(5)],
            ],
        );
        let (g, map) = build_p7free(&f).unwrap();
        assert!(g.is_connected());
        assert!(g.has_edge(map.clique()[0], map.clique()[1]));
    }

    #[test]
    fn unused_variable_is_rejected() {
        let f = Formula3Sat::new(4, vec![[Lit::pos(0), Lit::pos(1), Lit::pos(2)]]);
        assert_eq!(build_p7free(&f).unwrap_err(), ReductionError::UnusedVariable(3));
        assert_eq!(
            build_p7free(&Formula3Sat::new(0, vec![])).unwrap_err(),
            ReductionError::EmptyFormula
        );
    }
}
