//! Binary codes with sequential recovery from `t` erasures and locality `r`,
//! built on high-girth layered tree-like graphs.
//!
//! The pipeline:
//!
//! 1. [`construct::build_base_graph`] picks an `r`-regular (even `t`) or
//!    `(r, r+1)`-biregular bipartite (odd `t`) base graph.
//! 2. [`construct::layer_step`] stacks parent layers of fan-in `r` on top.
//! 3. [`construct::ensure_girth`] lifts the whole layered graph to girth
//!    `t + 1` with one of the covering constructions in [`lift`], which keep
//!    the layer structure intact.
//! 4. [`construct::attach_dummies`] hangs a pendant edge off every top-layer
//!    vertex and [`code::emit_code`] turns the result into a parity-check
//!    matrix: edges are code symbols, non-pendant vertices are checks.
//!
//! [`code::verify_seq_recovery`] then checks recoverability by peeling.

pub mod code;
pub mod construct;
pub mod graph;
pub mod group;
pub mod lift;
pub mod par;

pub use graph::{Girth, Graph, Layer, VertexTag};
pub use par::Exec;
