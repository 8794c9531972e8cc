use std::fmt;

use serde::{Deserialize, Serialize};

/// The gadget role a vertex plays in a reduction.
///
/// `var`, `clause` and `source` are 0-based indices into the formula or
/// the source graph. `index` is the 1-based gadget index (1, 2 or 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexLabel {
    /// `T_x^i` on the 9-cycle of variable `var`.
    TrueVertex {
        var: usize,
        index: u8,
    },
    /// `F_x^i` on the 9-cycle of variable `var`.
    FalseVertex {
        var: usize,
        index: u8,
    },
    /// `u_x^i` on the 9-cycle of variable `var`.
    CycleU {
        var: usize,
        index: u8,
    },
    ClauseVertex {
        clause: usize,
    },
    /// The variable vertex for `var` inside the clause gadget of `clause`.
    VariableVertex {
        clause: usize,
        var: usize,
    },
    /// The clique vertex paired with `var` inside the clause gadget.
    LVertex {
        clause: usize,
        var: usize,
    },
    /// Port `v_i` of the replacement gadget for source vertex `source`.
    Port {
        source: usize,
        index: u8,
    },
    GadgetU {
        source: usize,
        index: u8,
    },
    GadgetW {
        source: usize,
        index: u8,
    },
    GadgetA {
        source: usize,
        index: u8,
    },
    GadgetB {
        source: usize,
        index: u8,
    },
    GadgetC {
        source: usize,
        index: u8,
    },
    PosLiteral {
        var: usize,
    },
    NegLiteral {
        var: usize,
    },
    TriangleU {
        var: usize,
    },
    #[default]
    Plain,
}

impl VertexLabel {
    pub fn gadget_index(&self) -> Option<u8> {
        use VertexLabel::*;
        match *self {
            TrueVertex { index, .. }
            | FalseVertex { index, .. }
            | CycleU { index, .. }
            | Port { index, .. }
            | GadgetU { index, .. }
            | GadgetW { index, .. }
            | GadgetA { index, .. }
            | GadgetB { index, .. }
            | GadgetC { index, .. } => Some(index),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        match self.gadget_index() {
            Some(i) if !(1..=3).contains(&i) => Err(format!("gadget index {i} not in 1..=3")),
            _ => Ok(()),
        }
    }

    /// Short family name, used for DOT coloring.
    pub fn family(&self) -> &'static str {
        use VertexLabel::*;
        match self {
            TrueVertex { .. } => "true",
            FalseVertex { .. } => "false",
            CycleU { .. } => "cycle_u",
            ClauseVertex { .. } => "clause",
            VariableVertex { .. } => "variable",
            LVertex { .. } => "clique",
            Port { .. } => "port",
            GadgetU { .. } | GadgetW { .. } => "gadget_uw",
            GadgetA { .. } | GadgetB { .. } | GadgetC { .. } => "gadget_abc",
            PosLiteral { .. } => "pos_literal",
            NegLiteral { .. } => "neg_literal",
            TriangleU { .. } => "triangle_u",
            Plain => "plain",
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use VertexLabel::*;
        match *self {
            TrueVertex { var, index } => write!(f, "T_x{var}^{index}"),
            FalseVertex { var, index } => write!(f, "F_x{var}^{index}"),
            CycleU { var, index } => write!(f, "u_x{var}^{index}"),
            ClauseVertex { clause } => write!(f, "c{clause}"),
            VariableVertex { clause, var } => write!(f, "c{clause}.x{var}"),
            LVertex { clause, var } => write!(f, "c{clause}.l_x{var}"),
            Port { source, index } => write!(f, "v{source}.v{index}"),
            GadgetU { source, index } => write!(f, "v{source}.u{index}"),
            GadgetW { source, index } => write!(f, "v{source}.w{index}"),
            GadgetA { source, index } => write!(f, "v{source}.a{index}"),
            GadgetB { source, index } => write!(f, "v{source}.b{index}"),
            GadgetC { source, index } => write!(f, "v{source}.c{index}"),
            PosLiteral { var } => write!(f, "x{var}"),
            NegLiteral { var } => write!(f, "~x{var}"),
            TriangleU { var } => write!(f, "u_x{var}"),
            Plain => write!(f, "plain"),
        }
    }
}
