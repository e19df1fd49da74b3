//! Girth-raising covering constructions.
//!
//! Every lift produced here numbers its vertices so that copy `x` of base
//! vertex `i` sits at index `i * multiplier + x`; the vertex tag records
//! `base_index = i` and `copy_label = x`, and copies inherit the layer of
//! their base vertex. Composite lifts keep the same layout with respect to
//! the original input.

mod matching;
mod raise;
mod voltage;

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Girth, Graph, GraphError, VertexTag};
use crate::group::GroupError;

pub use matching::matching_lift;
pub use raise::{raise_girth, Resources, Strategy};
pub use voltage::{
    count_g_cycles_through_edge, cayley_voltage_lift, double_cover_lift, greedy_voltage_lift,
    greedy_voltage_lift_with, voltage_lift, VoltageAssignment,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("double cover needs odd girth, found {0}")]
    GirthNotOdd(Girth),
    #[error("greedy voltage lift needs even girth, found {0}")]
    GirthNotEven(Girth),
    #[error("group of order {order} is too small: need more than {bound} elements")]
    GroupTooSmall { order: usize, bound: u128 },
    #[error("a group of order {0} is too large to build")]
    GroupTooLarge(u128),
    #[error("no admissible voltage left for edge ({0}, {1})")]
    Exhausted(usize, usize),
    #[error("edge colouring uses {colors} colours but the half generator set has {half}")]
    HalfSetTooSmall { colors: usize, half: usize },
    #[error("companion must be {expected}-regular")]
    CompanionDegreeMismatch { expected: usize },
    #[error("companion girth {girth} is below the target {target}")]
    CompanionGirthTooSmall { girth: Girth, target: usize },
    #[error("Cayley graph girth {girth} is below the target {target}")]
    CayleyGirthTooSmall { girth: Girth, target: usize },
    #[error("strategy needs a {0}")]
    MissingResource(&'static str),
    #[error("girth stuck at {0} while raising")]
    NoProgress(Girth),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LiftMethod {
    Identity,
    DoubleCover,
    GreedyVoltage,
    CayleyVoltage,
    Matching,
    Composite,
}

impl fmt::Display for LiftMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LiftMethod::Identity => "identity",
            LiftMethod::DoubleCover => "double-cover",
            LiftMethod::GreedyVoltage => "greedy-voltage",
            LiftMethod::CayleyVoltage => "cayley-voltage",
            LiftMethod::Matching => "matching",
            LiftMethod::Composite => "composite",
        };
        f.write_str(s)
    }
}

/// One step of a composite lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftStage {
    pub method: LiftMethod,
    pub multiplier: usize,
    pub girth: Girth,
    /// Group spec or companion description, empty for double covers.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftResult {
    pub graph: Graph,
    pub multiplier: usize,
    pub method: LiftMethod,
    pub stages: Vec<LiftStage>,
}

impl LiftResult {
    /// The input itself, retagged so that every vertex is its own base.
    pub fn identity(g: &Graph) -> Self {
        let mut graph = g.clone();
        for v in 0..graph.order() {
            let layer = graph.tag(v).layer;
            graph.set_tag(
                v,
                VertexTag {
                    layer,
                    base_index: v,
                    copy_label: 0,
                },
            );
        }
        LiftResult {
            graph,
            multiplier: 1,
            method: LiftMethod::Identity,
            stages: Vec::new(),
        }
    }

    pub(crate) fn single(graph: Graph, multiplier: usize, method: LiftMethod, detail: String) -> Self {
        let girth = graph.girth();
        LiftResult {
            graph,
            multiplier,
            method,
            stages: vec![LiftStage {
                method,
                multiplier,
                girth,
                detail,
            }],
        }
    }

    /// Lifts `self` further by `next`, a lift of `self.graph`. Provenance is
    /// rewritten to point at the original base.
    pub fn then(self, next: LiftResult) -> LiftResult {
        if self.multiplier == 1 && self.stages.is_empty() {
            return next;
        }
        let mut graph = next.graph;
        for v in 0..graph.order() {
            let t = *graph.tag(v);
            let prev = self.graph.tag(t.base_index);
            graph.set_tag(
                v,
                VertexTag {
                    layer: t.layer,
                    base_index: prev.base_index,
                    copy_label: prev.copy_label * next.multiplier as u64 + t.copy_label,
                },
            );
        }
        let mut stages = self.stages;
        stages.extend(next.stages);
        let method = if stages.len() == 1 {
            stages[0].method
        } else {
            LiftMethod::Composite
        };
        LiftResult {
            graph,
            multiplier: self.multiplier * next.multiplier,
            method,
            stages,
        }
    }

    /// `copy_vertex base_vertex copy_label` lines, one per lifted vertex.
    pub fn provenance_table(&self) -> String {
        let mut out = String::from("# copy_vertex base_vertex copy_label\n");
        for (v, t) in self.graph.tags().iter().enumerate() {
            let _ = writeln!(out, "{v} {} {}", t.base_index, t.copy_label);
        }
        out
    }
}

/// Checks that `lift.graph` covers `base` through its tags: sizes multiply,
/// every copy sits at `base * multiplier + label` with the base's layer, and
/// the neighbours of each copy project bijectively onto the neighbours of
/// its base vertex. The last condition is exactly the statement that every
/// base edge lifts to a perfect matching between fibres.
pub fn verify_covering(base: &Graph, lift: &LiftResult) -> Result<(), String> {
    let m = lift.multiplier;
    let g = &lift.graph;
    if m == 0 || g.order() != m * base.order() {
        return Err(format!(
            "order {} is not {} x {}",
            g.order(),
            m,
            base.order()
        ));
    }
    let mut proj = Vec::with_capacity(base.max_degree());
    for v in 0..g.order() {
        let t = g.tag(v);
        if t.base_index >= base.order() || t.copy_label >= m as u64 {
            return Err(format!("vertex {v} has out-of-range provenance"));
        }
        if t.base_index * m + t.copy_label as usize != v {
            return Err(format!("vertex {v} is not at base * multiplier + label"));
        }
        if t.layer != base.tag(t.base_index).layer {
            return Err(format!("vertex {v} changed layer"));
        }
        proj.clear();
        proj.extend(g.neighbors(v).iter().map(|&w| g.tag(w).base_index));
        proj.sort_unstable();
        if proj != base.neighbors(t.base_index) {
            return Err(format!(
                "neighbours of vertex {v} do not project onto those of base vertex {}",
                t.base_index
            ));
        }
    }
    Ok(())
}
