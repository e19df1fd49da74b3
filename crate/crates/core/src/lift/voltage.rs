//! Voltage lifts: the bipartite double cover, the greedy cycle-killing
//! assignment and the Cayley-coloured assignment.

use std::collections::{HashSet, VecDeque};

use super::{LiftError, LiftMethod, LiftResult};
use crate::graph::{bipartite_double_cover, edge_color, Girth, Graph, VertexTag};
use crate::group::{split_half_set, Elem, FiniteGroup, GeneratorSet, GroupError};
use crate::par::{self, Exec};

/// Voltages on the edges of a graph, stored on the `u < v` orientation;
/// the reverse orientation carries the inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoltageAssignment {
    edges: Vec<(usize, usize)>,
    volts: Vec<Elem>,
}

impl VoltageAssignment {
    /// `edges` must be the sorted edge list of the graph being lifted.
    pub fn new(edges: Vec<(usize, usize)>, volts: Vec<Elem>) -> Self {
        assert_eq!(edges.len(), volts.len());
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        VoltageAssignment { edges, volts }
    }

    /// Voltage on the directed edge `u -> v`.
    pub fn get(&self, h: &FiniteGroup, u: usize, v: usize) -> Option<Elem> {
        let key = (u.min(v), u.max(v));
        let i = self.edges.binary_search(&key).ok()?;
        Some(if u < v { self.volts[i] } else { h.inv(self.volts[i]) })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn volts(&self) -> &[Elem] {
        &self.volts
    }
}

/// Derived graph of a voltage assignment: copy `(i, x)` at `i * |H| + x`,
/// edges `{(i, x), (j, x * h_ij)}` for `i < j`.
pub fn voltage_lift(g: &Graph, h: &FiniteGroup, volts: &VoltageAssignment, method: LiftMethod) -> LiftResult {
    let m = h.order();
    let mut edges = Vec::with_capacity(g.edge_count() * m);
    for (&(i, j), &a) in volts.edges.iter().zip(&volts.volts) {
        for x in h.elements() {
            edges.push((i * m + x.index(), j * m + h.mul(x, a).index()));
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
    LiftResult::single(graph, m, method, h.spec().to_string())
}

pub fn double_cover_lift(g: &Graph) -> Result<LiftResult, LiftError> {
    let girth = g.girth();
    match girth {
        Girth::Finite(k) if k % 2 == 1 => {}
        _ => return Err(LiftError::GirthNotOdd(girth)),
    }
    Ok(LiftResult::single(
        bipartite_double_cover(g),
        2,
        LiftMethod::DoubleCover,
        String::new(),
    ))
}

/// BFS distances from `target`, truncated at `limit`.
fn distances_to(g: &Graph, target: usize, limit: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[target] = 0;
    let mut queue = VecDeque::from([target]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == limit {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Every simple path `from -> ... -> to` with exactly `len` edges whose
/// edges all pass `allowed`. Paths are reported as vertex sequences.
fn simple_paths<A, V>(g: &Graph, from: usize, to: usize, len: usize, allowed: A, mut visit: V)
where
    A: Fn(usize, usize) -> bool,
    V: FnMut(&[usize]),
{
    let dist = distances_to(g, to, len);
    let mut on_path = vec![false; g.order()];
    let mut path = vec![from];
    on_path[from] = true;
    // explicit stack of neighbour cursors
    let mut cursor = vec![0usize];
    while let Some(c) = cursor.last_mut() {
        let u = *path.last().unwrap();
        let depth = path.len() - 1;
        if depth == len {
            if u == to {
                visit(&path);
            }
            cursor.pop();
            on_path[path.pop().unwrap()] = false;
            continue;
        }
        let nbrs = g.neighbors(u);
        if *c >= nbrs.len() || u == to {
            cursor.pop();
            on_path[path.pop().unwrap()] = false;
            continue;
        }
        let w = nbrs[*c];
        *c += 1;
        let rem = len - depth - 1;
        if on_path[w] || dist[w] > rem || !allowed(u, w) {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        cursor.push(0);
    }
}

/// Number of cycles of length exactly `girth(g)` through the edge `{u, v}`.
pub fn count_g_cycles_through_edge(g: &Graph, u: usize, v: usize) -> usize {
    let Some(g0) = g.girth().finite() else {
        return 0;
    };
    if !g.has_edge(u, v) {
        return 0;
    }
    let mut count = 0;
    simple_paths(g, v, u, g0 - 1, |_, _| true, |_| count += 1);
    count
}

/// `(Δ - 1)^(g/2)`, saturating.
pub(crate) fn greedy_bound(max_degree: usize, girth: usize) -> u128 {
    (max_degree.saturating_sub(1) as u128)
        .checked_pow((girth / 2) as u32)
        .unwrap_or(u128::MAX)
}

/// Greedy voltage lift with the default execution policy.
pub fn greedy_voltage_lift(g: &Graph, h: &FiniteGroup) -> Result<LiftResult, LiftError> {
    greedy_voltage_lift_with(g, h, Exec::default())
}

/// Sweeps the edges in lexicographic order and gives each the
/// smallest-index voltage that closes none of the girth cycles formed with
/// earlier edges. The cycle lists depend only on the order, so they are
/// enumerated up front under `exec`; the sweep itself is sequential.
pub fn greedy_voltage_lift_with(g: &Graph, h: &FiniteGroup, exec: Exec) -> Result<LiftResult, LiftError> {
    let girth = g.girth();
    let g0 = match girth {
        Girth::Finite(k) if k % 2 == 0 => k,
        _ => return Err(LiftError::GirthNotEven(girth)),
    };
    let bound = greedy_bound(g.max_degree(), g0);
    if (h.order() as u128) <= bound {
        return Err(LiftError::GroupTooSmall {
            order: h.order(),
            bound,
        });
    }
    let edges = g.edge_list();
    let rank = |a: usize, b: usize| edges.binary_search(&(a.min(b), a.max(b))).unwrap();

    // For edge k = (i, j): paths j -> ... -> i over edges of rank < k,
    // stored as (rank, forward) steps.
    let constraints: Vec<Vec<Vec<(usize, bool)>>> = par::map_range(exec, edges.len(), |k| {
        let (i, j) = edges[k];
        let mut found = Vec::new();
        simple_paths(
            g,
            j,
            i,
            g0 - 1,
            |a, b| rank(a, b) < k,
            |p| found.push(p.windows(2).map(|w| (rank(w[0], w[1]), w[0] < w[1])).collect()),
        );
        found
    });

    let mut volts: Vec<Elem> = Vec::with_capacity(edges.len());
    let mut forbidden = HashSet::new();
    for (k, paths) in constraints.iter().enumerate() {
        forbidden.clear();
        for p in paths {
            let w = h.product(p.iter().map(|&(r, fwd)| if fwd { volts[r] } else { h.inv(volts[r]) }));
            forbidden.insert(h.inv(w));
        }
        let pick = h
            .elements()
            .find(|x| !forbidden.contains(x))
            .ok_or(LiftError::Exhausted(edges[k].0, edges[k].1))?;
        volts.push(pick);
    }
    let assignment = VoltageAssignment::new(edges, volts);
    Ok(voltage_lift(g, h, &assignment, LiftMethod::GreedyVoltage))
}

/// Colours the edges properly and gives colour `k` the voltage `S1[k]`,
/// where `S1` is the inverse-free half of `s`. Closed non-backtracking walks
/// then read as reduced words over `S`, so the lift's girth is at least the
/// girth of `Cay(H, S)`.
pub fn cayley_voltage_lift(g: &Graph, h: &FiniteGroup, s: &GeneratorSet) -> Result<LiftResult, LiftError> {
    if !s.is_symmetric() {
        return Err(GroupError::NotSymmetric.into());
    }
    let half = split_half_set(s)?;
    let coloring = edge_color(g);
    if half.len() < coloring.num_colors() {
        return Err(LiftError::HalfSetTooSmall {
            colors: coloring.num_colors(),
            half: half.len(),
        });
    }
    let volts = coloring.colors.iter().map(|&c| half.elems[c]).collect();
    let assignment = VoltageAssignment::new(coloring.edges, volts);
    Ok(voltage_lift(g, h, &assignment, LiftMethod::CayleyVoltage))
}
