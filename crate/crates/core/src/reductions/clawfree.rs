//! Vertex replacement turning a degree-{2,3} graph into a claw-free one.
//!
//! A degree-3 vertex becomes the 18-cycle
//! `v1 u1 a1 b1 c1 w2 v2 u2 a2 b2 c2 w3 v3 u3 a3 b3 c3 w1` with chords
//! `u_i w_i`, so each `v_i u_i w_i` is a triangle. A degree-2 vertex
//! becomes the path `v1 u1 a1 b1 c1 u2 v2`. Port `v_i` carries the edge to
//! the i-th neighbor in increasing id order.

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::graph::{LabeledGraph, VertexLabel, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetKind {
    Degree2,
    Degree3,
}

impl GadgetKind {
    /// Members of a minimum dominating set inside the gadget when the
    /// source vertex is outside / inside the source set.
    pub fn counts(self) -> [usize; 2] {
        match self {
            GadgetKind::Degree2 => [2, 3],
            GadgetKind::Degree3 => [5, 6],
        }
    }

    fn size(self) -> usize {
        match self {
            GadgetKind::Degree2 => 7,
            GadgetKind::Degree3 => 18,
        }
    }
}

/// The replacement of one source vertex. Vectors are indexed by the
/// 0-based gadget index; `w` is empty for degree 2 and `a`, `b`, `c` have
/// one entry there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexGadget {
    pub source: usize,
    pub kind: GadgetKind,
    pub ports: Vec<usize>,
    /// Source neighbor attached at each port.
    pub port_neighbors: Vec<usize>,
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    /// Target ids `first..first + len` belong to this gadget.
    pub first: usize,
    pub len: usize,
}

impl VertexGadget {
    pub fn vertices(&self) -> std::ops::Range<usize> {
        self.first..self.first + self.len
    }

    /// Port index leading to source neighbor `y`.
    pub fn port_to(&self, y: usize) -> Option<usize> {
        self.port_neighbors.iter().position(|&z| z == y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawfreeReductionMap {
    pub source_n: usize,
    pub source_edges: Vec<[usize; 2]>,
    pub gadgets: Vec<VertexGadget>,
    /// Source vertices of degree 2.
    pub v2: Vec<usize>,
    /// Source vertices of degree 3.
    pub v3: Vec<usize>,
    /// Vertex count of the built graph.
    pub n: usize,
}

impl ClawfreeReductionMap {
    /// `5|V_3| + 2|V_2|`, the amount by which γ grows.
    pub fn gamma_shift(&self) -> usize {
        5 * self.v3.len() + 2 * self.v2.len()
    }

    /// Source vertex whose gadget contains target vertex `t`.
    pub fn source_of(&self, t: usize) -> Option<usize> {
        let i = self.gadgets.partition_point(|g| g.first + g.len <= t);
        self.gadgets.get(i).filter(|g| g.first <= t).map(|g| g.source)
    }

    fn source_dominates(&self, d: &VertexSet) -> Result<(), ReductionError> {
        match self
            .gadgets
            .iter()
            .find(|g| !d.contains(g.source) && g.port_neighbors.iter().all(|&y| !d.contains(y)))
        {
            Some(g) => Err(ReductionError::NotDominating(g.source)),
            None => Ok(()),
        }
    }
}

fn add_gadget(h: &mut LabeledGraph, source: usize, neighbors: &[usize]) -> VertexGadget {
    let first = h.n();
    let kind = if neighbors.len() == 3 {
        GadgetKind::Degree3
    } else {
        GadgetKind::Degree2
    };
    let mut gadget = VertexGadget {
        source,
        kind,
        ports: Vec::new(),
        port_neighbors: neighbors.to_vec(),
        u: Vec::new(),
        w: Vec::new(),
        a: Vec::new(),
        b: Vec::new(),
        c: Vec::new(),
        first,
        len: kind.size(),
    };
    let ix = |i: usize| i as u8 + 1;
    match kind {
        GadgetKind::Degree3 => {
            let mut ws = [0; 3];
            for i in 0..3 {
                gadget
                    .ports
                    .push(h.add_vertex(VertexLabel::Port { source, index: ix(i) }));
                gadget
                    .u
                    .push(h.add_vertex(VertexLabel::GadgetU { source, index: ix(i) }));
                gadget
                    .a
                    .push(h.add_vertex(VertexLabel::GadgetA { source, index: ix(i) }));
                gadget
                    .b
                    .push(h.add_vertex(VertexLabel::GadgetB { source, index: ix(i) }));
                gadget
                    .c
                    .push(h.add_vertex(VertexLabel::GadgetC { source, index: ix(i) }));
                let k = (i + 1) % 3;
                ws[k] = h.add_vertex(VertexLabel::GadgetW { source, index: ix(k) });
            }
            gadget.w = ws.to_vec();
            for k in 0..18 {
                h.add_edge(first + k, first + (k + 1) % 18).expect("gadget cycle");
            }
            for i in 0..3 {
                h.add_edge(gadget.u[i], gadget.w[i]).expect("gadget chord");
            }
        }
        GadgetKind::Degree2 => {
            let p = |h: &mut LabeledGraph, l| h.add_vertex(l);
            gadget.ports.push(p(h, VertexLabel::Port { source, index: 1 }));
            gadget.u.push(p(h, VertexLabel::GadgetU { source, index: 1 }));
            gadget.a.push(p(h, VertexLabel::GadgetA { source, index: 1 }));
            gadget.b.push(p(h, VertexLabel::GadgetB { source, index: 1 }));
            gadget.c.push(p(h, VertexLabel::GadgetC { source, index: 1 }));
            gadget.u.push(p(h, VertexLabel::GadgetU { source, index: 2 }));
            gadget.ports.push(p(h, VertexLabel::Port { source, index: 2 }));
            for k in 0..6 {
                h.add_edge(first + k, first + k + 1).expect("gadget path");
            }
        }
    }
    gadget
}

/// Replaces every vertex of a connected graph with all degrees in {2, 3}.
/// The result is connected, claw-free, subcubic and has minimum degree 2.
pub fn build_clawfree(g: &LabeledGraph) -> Result<(LabeledGraph, ClawfreeReductionMap), ReductionError> {
    if g.is_empty() {
        return Err(ReductionError::EmptyGraph);
    }
    if let Some(v) = (0..g.n()).find(|&v| !(2..=3).contains(&g.degree(v))) {
        return Err(ReductionError::BadDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if !g.is_connected() {
        return Err(ReductionError::Disconnected);
    }
    let mut h = LabeledGraph::new(0);
    let gadgets: Vec<VertexGadget> = (0..g.n()).map(|v| add_gadget(&mut h, v, g.neighbors(v))).collect();
    let source_edges: Vec<[usize; 2]> = g.edges().map(|(x, y)| [x, y]).collect();
    for &[x, y] in &source_edges {
        let px = gadgets[x].ports[gadgets[x].port_to(y).expect("neighbor")];
        let py = gadgets[y].ports[gadgets[y].port_to(x).expect("neighbor")];
        h.add_edge(px, py).expect("port edge");
    }
    let by_kind = |k| (0..g.n()).filter(|&v| gadgets[v].kind == k).collect::<Vec<_>>();
    let map = ClawfreeReductionMap {
        source_n: g.n(),
        source_edges,
        v2: by_kind(GadgetKind::Degree2),
        v3: by_kind(GadgetKind::Degree3),
        gadgets,
        n: h.n(),
    };
    Ok((h, map))
}

/// Lifts a dominating set of the source graph to one of the built graph
/// of size `|d| + 5|V_3| + 2|V_2|`.
pub fn lift_dominating_set(map: &ClawfreeReductionMap, d: &VertexSet) -> Result<VertexSet, ReductionError> {
    if d.universe() != map.source_n {
        return Err(ReductionError::UniverseMismatch {
            expected: map.source_n,
            found: d.universe(),
        });
    }
    map.source_dominates(d)?;
    let mut out = VertexSet::empty(map.n);
    for g in &map.gadgets {
        let picks: Vec<usize> = if d.contains(g.source) {
            g.ports.iter().chain(&g.b).copied().collect()
        } else {
            let p = g
                .port_neighbors
                .iter()
                .position(|&y| d.contains(y))
                .expect("checked dominating");
            match g.kind {
                GadgetKind::Degree3 => {
                    let (p1, p2) = ((p + 1) % 3, (p + 2) % 3);
                    vec![g.a[p], g.c[p2], g.w[p1], g.u[p2], g.b[p1]]
                }
                GadgetKind::Degree2 if p == 0 => vec![g.a[0], g.u[1]],
                GadgetKind::Degree2 => vec![g.c[0], g.u[0]],
            }
        };
        for t in picks {
            out.insert(t);
        }
    }
    Ok(out)
}

/// Projects a minimum dominating set of the built graph to the source: a
/// vertex is kept iff its gadget holds 6 (degree 3) or 3 (degree 2)
/// members. Every gadget must hold one of its two minimum counts.
pub fn project_dominating_set(map: &ClawfreeReductionMap, d: &VertexSet) -> Result<VertexSet, ReductionError> {
    if d.universe() != map.n {
        return Err(ReductionError::UniverseMismatch {
            expected: map.n,
            found: d.universe(),
        });
    }
    let mut out = VertexSet::empty(map.source_n);
    for g in &map.gadgets {
        let count = g.vertices().filter(|&t| d.contains(t)).count();
        let allowed = g.kind.counts();
        if count == allowed[1] {
            out.insert(g.source);
        } else if count != allowed[0] {
            return Err(ReductionError::GadgetCount {
                source_vertex: g.source,
                count,
                allowed,
            });
        }
    }
    map.source_dominates(&out)?;
    Ok(out)
}
