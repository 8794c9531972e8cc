//! Simple undirected graphs with per-vertex provenance labels.
//!
//! Vertices are dense `0..n` identifiers. Every vertex carries a
//! [`VertexLabel`] recording which gadget role it plays in a reduction, so
//! tests and callers can address "the second true vertex of variable 3"
//! without relying on construction order.

mod io;
mod label;
mod recognize;
mod vertex_set;

use std::fmt;

use thiserror::Error;

pub use io::{
    emit_dot, emit_edge_list_json, emit_graph6, parse_edge_list_json, parse_graph6, parse_graph6_lines, EdgeListDoc,
    FormatError,
};
pub use label::VertexLabel;
pub use recognize::{find_claw, is_claw_free, is_pk_free, PathSearch};
pub use vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop requested on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("label list has length {found}, expected {expected}")]
    LabelCount { expected: usize, found: usize },
    #[error("invalid label on vertex {vertex}: {reason}")]
    InvalidLabel { vertex: usize, reason: String },
}

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// Adjacency lists are kept sorted, which makes every derived output
/// (edge lists, witnesses, serializations) deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LabeledGraph {
    adj: Vec<Vec<usize>>,
    labels: Vec<VertexLabel>,
}

impl LabeledGraph {
    /// `n` isolated vertices, all labeled [`VertexLabel::Plain`].
    pub fn new(n: usize) -> Self {
        LabeledGraph {
            adj: vec![Vec::new(); n],
            labels: vec![VertexLabel::Plain; n],
        }
    }

    pub fn with_labels(labels: Vec<VertexLabel>) -> Self {
        LabeledGraph {
            adj: vec![Vec::new(); labels.len()],
            labels,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("complete edges are valid");
            }
        }
        g
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn add_vertex(&mut self, label: VertexLabel) -> usize {
        self.adj.push(Vec::new());
        self.labels.push(label);
        self.adj.len() - 1
    }

    /// Inserts `{u, v}`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: VertexLabel) {
        self.labels[v] = label;
    }

    /// Vertices carrying exactly `label`.
    pub fn find_label(&self, label: VertexLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Contracts `{u, v}` into a single vertex.
    ///
    /// The merged vertex takes id `min(u, v)` and is labeled `Plain`; the
    /// vertex `max(u, v)` disappears and every higher id shifts down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<LabeledGraph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let relabel = |w: usize| match w.cmp(&hi) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => lo,
            std::cmp::Ordering::Greater => w - 1,
        };
        let mut labels = self.labels.clone();
        labels.remove(hi);
        labels[lo] = VertexLabel::Plain;
        let mut out = LabeledGraph::with_labels(labels);
        for (a, b) in self.edges() {
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                out.add_edge(a, b).expect("relabeled endpoints are in range");
            }
        }
        Ok(out)
    }

    /// The subgraph induced by `keep`, with vertices renumbered in the
    /// order given.
    pub fn induced(&self, keep: &[usize]) -> LabeledGraph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = LabeledGraph::with_labels(keep.iter().map(|&v| self.labels[v]).collect());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && pos[w] > i {
                    out.add_edge(i, pos[w]).expect("induced edge is valid");
                }
            }
        }
        out
    }

    /// Renumbers vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> LabeledGraph {
        assert_eq!(perm.len(), self.n());
        let mut labels = vec![VertexLabel::Plain; self.n()];
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[v];
        }
        let mut out = LabeledGraph::with_labels(labels);
        for (a, b) in self.edges() {
            out.add_edge(perm[a], perm[b]).expect("permutation is a bijection");
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_edge_builds_p2() {
        let mut g = LabeledGraph::new(2);
        assert_eq!(g.add_edge(0, 1), Ok(true));
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn add_edge_is_idempotent() {
        let mut g = LabeledGraph::new(2);
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Ok(false));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn add_edge_rejects_self_loop_and_range() {
        let mut g = LabeledGraph::new(2);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(g.add_edge(0, 2), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn contracting_c9_gives_c8() {
        let c9 = LabeledGraph::cycle(9);
        for (u, v) in c9.edges() {
            let g = c9.contract_edge(u, v).unwrap();
            assert_eq!(g.n(), 8);
            assert_eq!(g.edge_count(), 8);
            assert!((0..8).all(|w| g.degree(w) == 2));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn contracting_triangle_collapses_parallel_edges() {
        let g = LabeledGraph::cycle(3).contract_edge(0, 2).unwrap();
        assert_eq!(g, LabeledGraph::path(2));
    }

    #[test]
    fn contracting_middle_of_p4() {
        let g = LabeledGraph::path(4).contract_edge(1, 2).unwrap();
        assert_eq!(g, LabeledGraph::path(3));
    }

    #[test]
    fn contract_rejects_non_edge() {
        assert_eq!(
            LabeledGraph::path(4).contract_edge(0, 2),
            Err(GraphError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn contraction_relabels_merged_vertex_plain() {
        let mut g = LabeledGraph::path(3);
        g.set_label(0, VertexLabel::PosLiteral { var: 0 });
        g.set_label(2, VertexLabel::NegLiteral { var: 0 });
        let h = g.contract_edge(1, 0).unwrap();
        assert_eq!(h.labels(), &[VertexLabel::Plain, VertexLabel::NegLiteral { var: 0 }]);
    }

    #[test]
    fn basic_predicates() {
        let c9 = LabeledGraph::cycle(9);
        assert!(c9.is_connected());
        assert_eq!(c9.max_degree(), 2);
        assert!(c9.is_subcubic());

        let k5 = LabeledGraph::complete(5);
        assert_eq!(k5.max_degree(), 4);
        assert!(!k5.is_subcubic());

        let two_edges = LabeledGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn induced_and_permuted() {
        let c5 = LabeledGraph::cycle(5);
        assert_eq!(c5.induced(&[0, 1, 2]), LabeledGraph::path(3));
        let p = c5.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(p.edge_count(), 5);
        assert!(p.has_edge(4, 3) && p.has_edge(0, 4));
    }
}
