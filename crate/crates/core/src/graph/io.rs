//! graph6, edge-list JSON and DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{GraphError, LabeledGraph, VertexLabel};

const GRAPH6_HEADER: &str = ">>graph6<<";
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;
/// Upper bound on `n` accepted from edge-list JSON.
pub const MAX_JSON_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte {byte:#04x} at offset {pos} is outside the graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("malformed graph6 size header at offset {pos}")]
    BadHeader { pos: usize },
    #[error("graph6 payload truncated: expected {expected} bytes after offset {pos}, found {found}")]
    Truncated { pos: usize, expected: usize, found: usize },
    #[error("unexpected trailing data at offset {pos}")]
    TrailingData { pos: usize },
    #[error("non-zero padding bits in final byte at offset {pos}")]
    NonzeroPadding { pos: usize },
    #[error("graph with {0} vertices is too large for this format")]
    TooLarge(usize),
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<FormatError>,
    },
    #[error("invalid edge-list JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes the adjacency of `g` (labels are not representable in graph6).
pub fn emit_graph6(g: &LabeledGraph) -> Result<String, FormatError> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else if n <= LONG_MAX {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(FormatError::TooLarge(n));
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminator are accepted; everything else must be exact.
pub fn parse_graph6(input: &str) -> Result<LabeledGraph, FormatError> {
    let mut bytes = input.as_bytes();
    let mut offset = 0;
    if let Some(rest) = input.strip_prefix(GRAPH6_HEADER) {
        bytes = rest.as_bytes();
        offset = GRAPH6_HEADER.len();
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let sixbit = |pos: usize| -> Result<usize, FormatError> {
        let b = bytes[pos];
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(FormatError::InvalidByte {
                pos: pos + offset,
                byte: b,
            })
        }
    };
    let read_wide = |start: usize, count: usize| -> Result<usize, FormatError> {
        if bytes.len() < start + count {
            return Err(FormatError::Truncated {
                pos: start + offset,
                expected: count,
                found: bytes.len().saturating_sub(start),
            });
        }
        let mut v = 0;
        for p in start..start + count {
            v = (v << 6) | sixbit(p)?;
        }
        Ok(v)
    };

    let (n, mut pos) = if bytes[0] != 126 {
        (sixbit(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let n = read_wide(1, 3)?;
        if n <= SHORT_MAX {
            return Err(FormatError::BadHeader { pos: offset });
        }
        (n, 4)
    } else {
        let n = read_wide(2, 6)?;
        if n <= MEDIUM_MAX {
            return Err(FormatError::BadHeader { pos: offset });
        }
        (n, 8)
    };

    // n can reach 2^36, so size the payload in u128 before trusting it.
    let nbytes_wide = (n as u128 * (n as u128).saturating_sub(1) / 2).div_ceil(6);
    let found = bytes.len() - pos;
    if (found as u128) < nbytes_wide {
        return Err(FormatError::Truncated {
            pos: pos + offset,
            expected: usize::try_from(nbytes_wide).unwrap_or(usize::MAX),
            found,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if found > nbytes {
        return Err(FormatError::TrailingData {
            pos: pos + nbytes + offset,
        });
    }

    let mut g = LabeledGraph::new(n);
    let (mut i, mut j) = (0usize, 1usize);
    let mut remaining = nbits;
    while remaining > 0 {
        let word = sixbit(pos)?;
        let take = remaining.min(6);
        for b in 0..take {
            if word >> (5 - b) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        if take < 6 && word & ((1 << (6 - take)) - 1) != 0 {
            return Err(FormatError::NonzeroPadding { pos: pos + offset });
        }
        remaining -= take;
        pos += 1;
    }
    Ok(g)
}

/// Parses one graph6 string per non-empty line.
pub fn parse_graph6_lines(input: &str) -> Result<Vec<LabeledGraph>, FormatError> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim_end()).map_err(|e| FormatError::Line {
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}

/// Serialized form `{"n":…, "edges":[[u,v],…], "labels":[…]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeListDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<VertexLabel>>,
}

impl EdgeListDoc {
    pub fn from_graph(g: &LabeledGraph) -> Self {
        EdgeListDoc {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: Some(g.labels().to_vec()),
        }
    }

    pub fn into_graph(self) -> Result<LabeledGraph, FormatError> {
        if self.n > MAX_JSON_VERTICES {
            return Err(FormatError::TooLarge(self.n));
        }
        let mut g = match self.labels {
            Some(labels) => {
                if labels.len() != self.n {
                    return Err(GraphError::LabelCount {
                        expected: self.n,
                        found: labels.len(),
                    }
                    .into());
                }
                for (vertex, l) in labels.iter().enumerate() {
                    l.validate()
                        .map_err(|reason| GraphError::InvalidLabel { vertex, reason })?;
                }
                LabeledGraph::with_labels(labels)
            }
            None => LabeledGraph::new(self.n),
        };
        for [u, v] in self.edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

pub fn emit_edge_list_json(g: &LabeledGraph) -> String {
    serde_json::to_string(&EdgeListDoc::from_graph(g)).expect("edge list serializes")
}

pub fn parse_edge_list_json(input: &str) -> Result<LabeledGraph, FormatError> {
    let doc: EdgeListDoc = serde_json::from_str(input).map_err(|e| FormatError::Json(e.to_string()))?;
    doc.into_graph()
}

fn dot_color(label: &VertexLabel) -> &'static str {
    match label.family() {
        "true" | "pos_literal" => "palegreen",
        "false" | "neg_literal" => "lightcoral",
        "cycle_u" | "triangle_u" => "lightgray",
        "clause" => "gold",
        "variable" => "lightblue",
        "clique" => "plum",
        "port" => "orange",
        "gadget_uw" => "khaki",
        "gadget_abc" => "lightcyan",
        _ => "white",
    }
}

pub fn emit_dot(g: &LabeledGraph) -> String {
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for v in 0..g.n() {
        let l = g.label(v);
        let name = match l {
            VertexLabel::Plain => v.to_string(),
            _ => format!("{v}: {l}"),
        };
        writeln!(out, "  {v} [label=\"{name}\", fillcolor={}];", dot_color(&l)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
