//! Small named graphs used as base graphs, companions and test fixtures.

use super::Graph;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph is simple")
}

/// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges).expect("complete bipartite graph is simple")
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("Petersen graph is simple")
}

/// Heawood graph: the 3-regular incidence graph of the Fano plane, girth 6.
pub fn heawood() -> Graph {
    let mut edges = Vec::with_capacity(21);
    for i in 0..14 {
        edges.push((i, (i + 1) % 14));
    }
    for i in (0..14).step_by(2) {
        edges.push((i, (i + 5) % 14));
    }
    Graph::from_edges(14, edges).expect("Heawood graph is simple")
}

/// Circulant graph on `n` vertices joining `i` to `i ± j` for every jump
/// `j`. Returns `None` when the jumps produce loops or repeated edges.
pub fn circulant(n: usize, jumps: &[usize]) -> Option<Graph> {
    let mut edges = Vec::new();
    for i in 0..n {
        for &j in jumps {
            if j == 0 || j >= n {
                return None;
            }
            let k = (i + j) % n;
            // a jump of n/2 pairs i with i + n/2 once
            if 2 * j == n && i >= n / 2 {
                continue;
            }
            edges.push((i.min(k), i.max(k)));
        }
    }
    Graph::from_edges(n, edges).ok()
}

/// An `r`-regular circulant on `n` vertices, using jumps `1..=r/2` and the
/// antipodal jump `n/2` when `r` is odd.
pub fn regular_circulant(n: usize, r: usize) -> Option<Graph> {
    if n <= r || (n * r) % 2 == 1 {
        return None;
    }
    let mut jumps: Vec<usize> = (1..=r / 2).collect();
    if r % 2 == 1 {
        jumps.push(n / 2);
    }
    let g = circulant(n, &jumps)?;
    g.is_regular(r).then_some(g)
}
