//! Perfect matchings in bipartite graphs (Hopcroft–Karp) and the
//! decomposition of a regular bipartite graph into perfect matchings.

use std::collections::VecDeque;

use super::{Graph, GraphError};

/// Partition of the edge set into perfect matchings; edges are `(u, v)`
/// with `u < v`, each matching sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingDecomposition {
    pub matchings: Vec<Vec<(usize, usize)>>,
}

impl MatchingDecomposition {
    /// Checks that the parts are perfect matchings partitioning `E(g)`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut all: Vec<(usize, usize)> = Vec::with_capacity(g.edge_count());
        for m in &self.matchings {
            let mut covered = vec![false; g.order()];
            for &(u, v) in m {
                if covered[u] || covered[v] || !g.has_edge(u, v) {
                    return false;
                }
                covered[u] = true;
                covered[v] = true;
            }
            if covered.iter().any(|&c| !c) {
                return false;
            }
            all.extend_from_slice(m);
        }
        all.sort_unstable();
        all == g.edge_list()
    }
}

const UNMATCHED: usize = usize::MAX;

/// Hopcroft–Karp over `left` vertices with adjacency `adj[l]` into right
/// vertices `0..right`. Neighbour lists are scanned in stored order, so
/// sorted lists give smallest-index tie breaking. Returns `mate_of_left`.
fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> Vec<usize> {
    let left = adj.len();
    let mut mate_l = vec![UNMATCHED; left];
    let mut mate_r = vec![UNMATCHED; right];
    let mut dist = vec![usize::MAX; left];
    loop {
        // BFS layering from free left vertices
        let mut queue = VecDeque::new();
        for l in 0..left {
            if mate_l[l] == UNMATCHED {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match mate_r[r] {
                    UNMATCHED => found = true,
                    m if dist[m] == usize::MAX => {
                        dist[m] = dist[l] + 1;
                        queue.push_back(m);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            return mate_l;
        }
        let mut progress = false;
        for l in 0..left {
            if mate_l[l] == UNMATCHED && augment(l, adj, &mut mate_l, &mut mate_r, &mut dist) {
                progress = true;
            }
        }
        if !progress {
            return mate_l;
        }
    }
}

fn augment(l: usize, adj: &[Vec<usize>], mate_l: &mut [usize], mate_r: &mut [usize], dist: &mut [usize]) -> bool {
    for &r in &adj[l] {
        let m = mate_r[r];
        let ok = m == UNMATCHED || (dist[m] == dist[l] + 1 && augment(m, adj, mate_l, mate_r, dist));
        if ok {
            mate_l[l] = r;
            mate_r[r] = l;
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}

/// `(left, right, position)`, where `position[v]` is the index of `v`
/// within its side.
type Sides = (Vec<usize>, Vec<usize>, Vec<usize>);

/// Splits the vertices by a 2-colouring.
fn sides(g: &Graph) -> Result<Sides, GraphError> {
    let side = g.two_coloring().ok_or(GraphError::NotBipartite)?;
    let (mut left, mut right) = (Vec::new(), Vec::new());
    let mut pos = vec![0; g.order()];
    for v in 0..g.order() {
        let part = if side[v] == 0 { &mut left } else { &mut right };
        pos[v] = part.len();
        part.push(v);
    }
    Ok((left, right, pos))
}

fn matching_on(adj_full: &[Vec<usize>], left: &[usize], right: &[usize], pos: &[usize]) -> Option<Vec<(usize, usize)>> {
    if left.len() != right.len() {
        return None;
    }
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&l| adj_full[l].iter().map(|&r| pos[r]).collect())
        .collect();
    let mate = hopcroft_karp(&adj, right.len());
    let mut m = Vec::with_capacity(left.len());
    for (i, &r) in mate.iter().enumerate() {
        if r == UNMATCHED {
            return None;
        }
        let (u, v) = (left[i], right[r]);
        m.push((u.min(v), u.max(v)));
    }
    m.sort_unstable();
    Some(m)
}

/// A perfect matching of a bipartite graph, or `None` if none exists.
pub fn perfect_matching(g: &Graph) -> Result<Option<Vec<(usize, usize)>>, GraphError> {
    let (left, right, pos) = sides(g)?;
    let adj: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    Ok(matching_on(&adj, &left, &right, &pos))
}

/// Decomposes a `d`-regular bipartite graph into `d` disjoint perfect
/// matchings by repeatedly extracting a perfect matching from the
/// remaining `(d - i)`-regular graph.
pub fn matching_decomposition(g: &Graph) -> Result<MatchingDecomposition, GraphError> {
    let (left, right, pos) = sides(g)?;
    let d = if g.order() == 0 { 0 } else { g.degree(0) };
    if !g.is_regular(d) {
        return Err(GraphError::NotRegular);
    }
    let mut adj: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    let mut matchings = Vec::with_capacity(d);
    for _ in 0..d {
        let m = matching_on(&adj, &left, &right, &pos)
            .expect("regular bipartite graphs always have a perfect matching");
        for &(u, v) in &m {
            adj[u].retain(|&x| x != v);
            adj[v].retain(|&x| x != u);
        }
        matchings.push(m);
    }
    Ok(MatchingDecomposition { matchings })
}
