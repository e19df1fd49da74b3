//! Simple undirected graphs with per-vertex layer and provenance tags.
//!
//! Every construction in the crate (lifts, layered trees, code graphs)
//! produces a [`Graph`]. Adjacency lists are kept sorted, which makes edge
//! enumeration, and everything derived from it, deterministic.

mod coloring;
pub mod io;
mod matching;
pub mod named;
pub mod random;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use thiserror::Error;

use crate::par::{self, Exec};

pub use coloring::{edge_color, EdgeColoring};
pub use matching::{matching_decomposition, perfect_matching, MatchingDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not regular")]
    NotRegular,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Position of a vertex in the layered tree-like structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    /// The lower side of a bipartite base graph.
    L0,
    /// Layer `U_i`; `U(0)` is the base layer.
    U(usize),
    /// Pendant vertex carrying a degree-one code symbol.
    Dummy,
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Layer::L0 => write!(f, "L0"),
            Layer::U(i) => write!(f, "U{i}"),
            Layer::Dummy => write!(f, "Dummy"),
        }
    }
}

impl std::str::FromStr for Layer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "L0" => Ok(Layer::L0),
            "Dummy" => Ok(Layer::Dummy),
            _ => s
                .strip_prefix('U')
                .and_then(|i| i.parse().ok())
                .map(Layer::U)
                .ok_or_else(|| format!("unknown layer tag `{s}`")),
        }
    }
}

/// Layer membership plus provenance: which vertex of the pre-image graph
/// this vertex copies, and a label telling the copies apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexTag {
    pub layer: Option<Layer>,
    pub base_index: usize,
    pub copy_label: u64,
}

impl VertexTag {
    pub fn identity(v: usize) -> Self {
        VertexTag {
            layer: None,
            base_index: v,
            copy_label: 0,
        }
    }
}

/// Girth of a graph; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    pub fn at_least(self, k: usize) -> bool {
        self >= Girth::Finite(k)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    tags: Vec<VertexTag>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            tags: (0..n).map(VertexTag::identity).collect(),
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, repeated
    /// edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            adj,
            edge_count,
            tags: (0..n).map(VertexTag::identity).collect(),
        })
    }

    /// Constructors inside the crate that produce simple graphs by
    /// construction go through here; duplicates are a logic error.
    pub(crate) fn from_edges_trusted(n: usize, edges: &[(usize, usize)], tags: Vec<VertexTag>) -> Self {
        debug_assert_eq!(tags.len(), n);
        let mut deg = vec![0usize; n];
        for &(u, v) in edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut adj: Vec<Vec<usize>> = deg.iter().map(|&d| Vec::with_capacity(d)).collect();
        for &(u, v) in edges {
            debug_assert_ne!(u, v);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            debug_assert!(list.windows(2).all(|w| w[0] != w[1]), "parallel edge");
        }
        Graph {
            adj,
            edge_count: edges.len(),
            tags,
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn tag(&self, v: usize) -> &VertexTag {
        &self.tags[v]
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }

    pub fn set_tag(&mut self, v: usize, tag: VertexTag) {
        self.tags[v] = tag;
    }

    pub fn set_layer(&mut self, v: usize, layer: Option<Layer>) {
        self.tags[v].layer = layer;
    }

    /// Vertices tagged with `layer`, in increasing order.
    pub fn layer_members(&self, layer: Layer) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| self.tags[v].layer == Some(layer))
            .collect()
    }

    /// Appends a vertex and returns its index.
    pub fn add_vertex(&mut self, layer: Option<Layer>) -> usize {
        let v = self.adj.len();
        self.adj.push(Vec::new());
        self.tags.push(VertexTag {
            layer,
            base_index: v,
            copy_label: 0,
        });
        v
    }

    /// Adds an edge between existing vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(())
            }
        }
    }

    /// Degree histogram: degree -> number of vertices with that degree.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for list in &self.adj {
            *profile.entry(list.len()).or_insert(0) += 1;
        }
        profile
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|list| list.len() == d)
    }

    /// Proper 2-colouring with the lowest vertex of each component on
    /// side 0, or `None` when an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn girth(&self) -> Girth {
        girth_with(self, Exec::default())
    }
}

/// Exact girth, using the given execution policy for the per-source sweep.
///
/// One BFS per source vertex; a non-tree edge `(u, w)` closes a cycle of
/// length at most `dist(u) + dist(w) + 1`, and a source lying on a shortest
/// cycle attains it exactly. Searches stop once their depth cannot beat the
/// best cycle seen by any worker, so high-girth graphs only explore small
/// balls.
pub fn girth_with(g: &Graph, exec: Exec) -> Girth {
    let n = g.order();
    if is_forest(g) {
        return Girth::Infinite;
    }
    const CHUNK: usize = 256;
    let best = AtomicUsize::new(usize::MAX);
    let chunks = n.div_ceil(CHUNK);
    par::map_range(exec, chunks, |c| {
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = Vec::new();
        for s in c * CHUNK..((c + 1) * CHUNK).min(n) {
            let found = shortest_cycle_from(g, s, &best, &mut dist, &mut parent, &mut queue);
            best.fetch_min(found, Ordering::Relaxed);
            for &v in &queue {
                dist[v] = u32::MAX;
                parent[v] = usize::MAX;
            }
            queue.clear();
        }
    });
    match best.into_inner() {
        usize::MAX => Girth::Infinite,
        b => Girth::Finite(b),
    }
}

fn shortest_cycle_from(
    g: &Graph,
    s: usize,
    best: &AtomicUsize,
    dist: &mut [u32],
    parent: &mut [usize],
    queue: &mut Vec<usize>,
) -> usize {
    let mut local = usize::MAX;
    dist[s] = 0;
    queue.push(s);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let du = dist[u] as usize;
        let bound = local.min(best.load(Ordering::Relaxed));
        if 2 * du + 1 >= bound {
            break;
        }
        for &w in g.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = du as u32 + 1;
                parent[w] = u;
                queue.push(w);
            } else if parent[u] != w {
                local = local.min(du + dist[w] as usize + 1);
            }
        }
    }
    local
}

fn is_forest(g: &Graph) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut components = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    g.edge_count() + components == n
}

/// Bipartite double cover: vertex `i` becomes `2i` (side 0) and `2i + 1`
/// (side 1); every edge `{i, j}` becomes `{(i,0),(j,1)}` and `{(i,1),(j,0)}`.
/// Copies keep the layer of their base vertex and record it in `base_index`.
pub fn bipartite_double_cover(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (i, j) in g.edges() {
        edges.push((2 * i, 2 * j + 1));
        edges.push((2 * i + 1, 2 * j));
    }
    let tags = (0..2 * n)
        .map(|v| VertexTag {
            layer: g.tag(v / 2).layer,
            base_index: v / 2,
            copy_label: (v % 2) as u64,
        })
        .collect();
    Graph::from_edges_trusted(2 * n, &edges, tags)
}

/// Vertex-disjoint union. Component `c` occupies a contiguous index range;
/// each vertex keeps its layer, records its index inside the component as
/// `base_index` and the component position as `copy_label`.
pub fn disjoint_union(graphs: &[Graph]) -> Graph {
    let total: usize = graphs.iter().map(Graph::order).sum();
    let mut edges = Vec::with_capacity(graphs.iter().map(Graph::edge_count).sum());
    let mut tags = Vec::with_capacity(total);
    let mut offset = 0;
    for (c, g) in graphs.iter().enumerate() {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        tags.extend((0..g.order()).map(|v| VertexTag {
            layer: g.tag(v).layer,
            base_index: v,
            copy_label: c as u64,
        }));
        offset += g.order();
    }
    Graph::from_edges_trusted(total, &edges, tags)
}
