//! Lifting through a companion graph's perfect-matching decomposition.

use super::{LiftError, LiftMethod, LiftResult};
use crate::graph::{bipartite_double_cover, edge_color, matching_decomposition, Graph, VertexTag};

/// Copies of `g` indexed by the vertices of a `(Δ + 1)`-regular companion;
/// an edge of colour `k` is expanded along the `k`-th perfect matching of
/// the companion. A non-bipartite companion is replaced by its bipartite
/// double cover first. The lift's girth is at least the companion's.
pub fn matching_lift(g: &Graph, companion: &Graph) -> Result<LiftResult, LiftError> {
    let expected = g.max_degree() + 1;
    if companion.order() == 0 || !companion.is_regular(expected) {
        return Err(LiftError::CompanionDegreeMismatch { expected });
    }
    let (comp, detail) = if companion.is_bipartite() {
        (companion.clone(), format!("companion on {} vertices", companion.order()))
    } else {
        (
            bipartite_double_cover(companion),
            format!("double cover of companion on {} vertices", companion.order()),
        )
    };
    let dec = matching_decomposition(&comp)?;
    let coloring = edge_color(g);
    let m = comp.order();
    let mut edges = Vec::with_capacity(g.edge_count() * m);
    for (&(i, j), &c) in coloring.edges.iter().zip(&coloring.colors) {
        for &(a, b) in &dec.matchings[c] {
            edges.push((i * m + a, j * m + b));
            edges.push((i * m + b, j * m + a));
        }
    }
    let tags = (0..g.order() * m)
        .map(|v| VertexTag {
            layer: g.tag(v / m).layer,
            base_index: v / m,
            copy_label: (v % m) as u64,
        })
        .collect();
    let graph = Graph::from_edges_trusted(g.order() * m, &edges, tags);
    Ok(LiftResult::single(graph, m, LiftMethod::Matching, detail))
}
