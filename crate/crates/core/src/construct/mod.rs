//! Layered tree-like graphs and the code graph built on top of them.
//!
//! A [`LayeredGraph`] for locality `r` and erasure count `t` has a base
//! layer `U_0` (plus the lower side `L_0` of a bipartite base when `t` is
//! odd) and parent layers `U_1, ..., U_{s-1}`, `s = ⌊t/2⌋`. Every vertex of
//! `U_{i+1}` is joined to a block of exactly `r` vertices of `U_i`, and the
//! blocks partition `U_i`.

mod base;
mod pipeline;

use thiserror::Error;

use crate::graph::{disjoint_union, Graph, GraphError, Layer};
use crate::lift::{raise_girth, LiftError, LiftResult, Resources, Strategy};

pub use base::{build_base_graph, BaseSpec};
pub use pipeline::{run_pipeline, PipelineConfig, PipelineOutput};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
    #[error("top layer of {size} vertices is not divisible by r = {r}")]
    NotDivisible { size: usize, r: usize },
    #[error("layer invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseKind {
    /// `r`-regular base, `t` even.
    EvenBase,
    /// `(r, r+1)`-biregular bipartite base, `t` odd.
    OddBase,
}

/// `s = ⌊t/2⌋`; the layers run `U_0 ..= U_{s-1}`.
pub fn layer_count(t: usize) -> usize {
    t / 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    pub graph: Graph,
    pub r: usize,
    pub t: usize,
    pub base_kind: BaseKind,
    /// `layers[i]` lists `U_i` in increasing vertex order.
    pub layers: Vec<Vec<usize>>,
    /// `L_0`, empty for an even base.
    pub lower: Vec<usize>,
    /// `partitions[i][j]` is the block of `U_i` under the parent
    /// `layers[i + 1][j]`.
    pub partitions: Vec<Vec<Vec<usize>>>,
}

impl LayeredGraph {
    /// Reads layers and partitions off the vertex tags. Children of a
    /// parent are its neighbours in the layer below.
    pub fn from_tagged(graph: Graph, r: usize, t: usize, base_kind: BaseKind) -> Self {
        let mut layers = Vec::new();
        loop {
            let members = graph.layer_members(Layer::U(layers.len()));
            if members.is_empty() {
                break;
            }
            layers.push(members);
        }
        let lower = graph.layer_members(Layer::L0);
        let partitions = (1..layers.len())
            .map(|i| {
                layers[i]
                    .iter()
                    .map(|&p| {
                        graph
                            .neighbors(p)
                            .iter()
                            .copied()
                            .filter(|&c| graph.tag(c).layer == Some(Layer::U(i - 1)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        LayeredGraph {
            graph,
            r,
            t,
            base_kind,
            layers,
            lower,
            partitions,
        }
    }

    pub fn s(&self) -> usize {
        layer_count(self.t)
    }

    /// Index of the current top layer.
    pub fn top(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }

    pub fn top_layer(&self) -> &[usize] {
        self.layers.last().map(Vec::as_slice).unwrap_or(&[])
    }

    /// True once all `s` layers are present.
    pub fn is_complete(&self) -> bool {
        self.layers.len() == self.s()
    }

    /// Checks layer sizes, partitions, the allowed edge pattern and the
    /// degree profile for the current number of layers.
    pub fn validate(&self) -> Result<(), ConstructError> {
        let bad = |m: String| Err(ConstructError::Invariant(m));
        let r = self.r;
        let g = &self.graph;
        if self.layers.is_empty() || self.layers[0].is_empty() {
            return bad("base layer is empty".into());
        }
        if self.base_kind == BaseKind::EvenBase && !self.lower.is_empty() {
            return bad("even base with a lower layer".into());
        }
        if self.base_kind == BaseKind::OddBase && self.lower.is_empty() {
            return bad("odd base without a lower layer".into());
        }
        let tagged: usize = self.layers.iter().map(Vec::len).sum::<usize>() + self.lower.len();
        if tagged != g.order() {
            return bad(format!("{} of {} vertices carry a layer tag", tagged, g.order()));
        }
        let u0 = self.layers[0].len();
        let mut scale = 1usize;
        for (i, layer) in self.layers.iter().enumerate() {
            if layer.len() * scale != u0 {
                return bad(format!("|U{i}| = {} but |U0| / r^{i} = {u0}/{scale}", layer.len()));
            }
            scale *= r;
        }
        for (i, blocks) in self.partitions.iter().enumerate() {
            if blocks.len() != self.layers[i + 1].len() {
                return bad(format!("partition {i} has the wrong number of blocks"));
            }
            let mut covered: Vec<usize> = blocks.iter().flatten().copied().collect();
            covered.sort_unstable();
            if blocks.iter().any(|b| b.len() != r) || covered != self.layers[i] {
                return bad(format!("blocks over U{i} are not an r-partition"));
            }
        }
        let top = self.top();
        for (u, v) in g.edges() {
            let (a, b) = (g.tag(u).layer, g.tag(v).layer);
            let ok = match (a, b) {
                (Some(Layer::U(i)), Some(Layer::U(j))) => {
                    i.abs_diff(j) == 1 || (i == 0 && j == 0 && self.base_kind == BaseKind::EvenBase)
                }
                (Some(Layer::U(0)), Some(Layer::L0)) | (Some(Layer::L0), Some(Layer::U(0))) => {
                    self.base_kind == BaseKind::OddBase
                }
                _ => false,
            };
            if !ok {
                return bad(format!("edge ({u}, {v}) joins {a:?} and {b:?}"));
            }
        }
        for (i, layer) in self.layers.iter().enumerate() {
            let want = if i == top { r } else { r + 1 };
            for &v in layer {
                if g.degree(v) != want {
                    return bad(format!("U{i} vertex {v} has degree {}, expected {want}", g.degree(v)));
                }
                let below = i.checked_sub(1).map(Layer::U);
                let in_base = |w: usize| matches!(g.tag(w).layer, Some(Layer::U(0)) | Some(Layer::L0));
                let down = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| if i == 0 { in_base(w) } else { g.tag(w).layer == below })
                    .count();
                if down != r {
                    return bad(format!("U{i} vertex {v} has {down} neighbours below, expected {r}"));
                }
            }
        }
        for &v in &self.lower {
            if g.degree(v) != r + 1 {
                return bad(format!("L0 vertex {v} has degree {}", g.degree(v)));
            }
        }
        Ok(())
    }
}

/// Disjoint union of `copies` copies.
pub fn replicate(lg: &LayeredGraph, copies: usize) -> LayeredGraph {
    let parts = vec![lg.graph.clone(); copies];
    LayeredGraph::from_tagged(disjoint_union(&parts), lg.r, lg.t, lg.base_kind)
}

/// Adds one parent per contiguous `r`-block of the top layer.
pub fn layer_step(lg: &LayeredGraph) -> Result<LayeredGraph, ConstructError> {
    let r = lg.r;
    let top = lg.top_layer().to_vec();
    if top.is_empty() || !top.len().is_multiple_of(r) {
        return Err(ConstructError::NotDivisible { size: top.len(), r });
    }
    let next = Layer::U(lg.layers.len());
    let mut graph = lg.graph.clone();
    for block in top.chunks(r) {
        let p = graph.add_vertex(Some(next));
        for &c in block {
            graph.add_edge(c, p)?;
        }
    }
    Ok(LayeredGraph::from_tagged(graph, r, lg.t, lg.base_kind))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Adds layer steps until all `s` layers exist, replicating the whole graph
/// by the least factor that makes a step divisible whenever one would fail.
pub fn complete_layers(lg: &LayeredGraph) -> Result<LayeredGraph, ConstructError> {
    let mut cur = lg.clone();
    while cur.layers.len() < cur.s() {
        let size = cur.top_layer().len();
        if !size.is_multiple_of(cur.r) {
            let copies = cur.r / gcd(size, cur.r);
            cur = replicate(&cur, copies);
        }
        cur = layer_step(&cur)?;
    }
    Ok(cur)
}

/// Re-targets a layered graph built for a smaller `t' ≡ t (mod 2)` and adds
/// the missing layers.
pub fn extend_to_t(lg: &LayeredGraph, t: usize) -> Result<LayeredGraph, ConstructError> {
    if t <= lg.t || !(t - lg.t).is_multiple_of(2) {
        return Err(ConstructError::InfeasibleParams(format!(
            "cannot extend a t = {} structure to t = {t}; the difference must be positive and even",
            lg.t
        )));
    }
    let mut retargeted = lg.clone();
    retargeted.t = t;
    complete_layers(&retargeted)
}

/// A layered graph after lifting, with the lift's stage breakdown.
#[derive(Debug, Clone)]
pub struct Lifted {
    pub layered: LayeredGraph,
    pub lift: LiftResult,
}

/// Lifts the layered graph to girth at least `t + 1`. Copies keep their
/// base vertex's layer, so layers and partitions are read back off the
/// lifted graph and validated again.
pub fn ensure_girth(lg: &LayeredGraph, strategy: Strategy, resources: &Resources) -> Result<Lifted, ConstructError> {
    let lift = raise_girth(&lg.graph, lg.t + 1, strategy, resources)?;
    let layered = LayeredGraph::from_tagged(lift.graph.clone(), lg.r, lg.t, lg.base_kind);
    layered.validate()?;
    Ok(Lifted { layered, lift })
}

/// The layered graph with one pendant vertex hung off every top-layer
/// vertex. Dummies are appended after all layered vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeGraph {
    pub layered: LayeredGraph,
    pub graph: Graph,
    pub dummies: Vec<usize>,
}

impl CodeGraph {
    /// Splits a tagged graph with trailing `Dummy` vertices back into the
    /// layered part and the pendants, and validates both.
    pub fn from_graph(graph: Graph, r: usize, t: usize) -> Result<CodeGraph, ConstructError> {
        let bad = |m: String| Err(ConstructError::Invariant(m));
        let dummies = graph.layer_members(Layer::Dummy);
        let core = graph.order() - dummies.len();
        if dummies.iter().enumerate().any(|(i, &d)| d != core + i) {
            return bad("dummy vertices must come after all layered vertices".into());
        }
        let edges: Vec<(usize, usize)> = graph.edges().filter(|&(_, v)| v < core).collect();
        let tags = graph.tags()[..core].to_vec();
        let base_kind = if tags.iter().any(|t| t.layer == Some(Layer::L0)) {
            BaseKind::OddBase
        } else {
            BaseKind::EvenBase
        };
        let layered = LayeredGraph::from_tagged(Graph::from_edges_trusted(core, &edges, tags), r, t, base_kind);
        layered.validate()?;
        if !layered.is_complete() {
            return bad(format!("{} layers present, {} expected", layered.layers.len(), layered.s()));
        }
        let top = layered.top_layer();
        let mut hosts: Vec<usize> = Vec::with_capacity(dummies.len());
        for &d in &dummies {
            if graph.degree(d) != 1 {
                return bad(format!("dummy {d} has degree {}", graph.degree(d)));
            }
            hosts.push(graph.neighbors(d)[0]);
        }
        hosts.sort_unstable();
        if hosts != top {
            return bad("dummies do not hang one-to-one off the top layer".into());
        }
        Ok(CodeGraph {
            layered,
            graph,
            dummies,
        })
    }
}

pub fn attach_dummies(lg: &LayeredGraph) -> CodeGraph {
    let mut graph = lg.graph.clone();
    let mut dummies = Vec::with_capacity(lg.top_layer().len());
    for &v in lg.top_layer() {
        let w = graph.add_vertex(Some(Layer::Dummy));
        graph.add_edge(v, w).expect("fresh pendant vertex");
        dummies.push(w);
    }
    CodeGraph {
        layered: lg.clone(),
        graph,
        dummies,
    }
}
