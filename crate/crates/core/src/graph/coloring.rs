//! Misra–Gries edge colouring with at most `Δ + 1` colours.

use super::Graph;

/// Proper edge colouring; `colors[i]` is the colour of the `i`-th edge in
/// [`Graph::edges`] order. Colours are `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    /// Number of distinct colours actually used.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.colors[i])
    }

    /// True when every pair of edges sharing an endpoint differs in colour.
    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = vec![Vec::new(); g.order()];
        for (&(u, v), &c) in self.edges.iter().zip(&self.colors) {
            for x in [u, v] {
                if seen[x].contains(&c) {
                    return false;
                }
                seen[x].push(c);
            }
        }
        self.edges.len() == g.edge_count()
    }
}

/// Colour slots per vertex: `slot[v][c]` is the neighbour reached from `v`
/// through the edge of colour `c`.
struct Palette {
    slot: Vec<Vec<Option<usize>>>,
}

impl Palette {
    fn is_free(&self, v: usize, c: usize) -> bool {
        self.slot[v][c].is_none()
    }

    fn first_free(&self, v: usize) -> usize {
        self.slot[v].iter().position(Option::is_none).expect("Δ+1 palette always has a free colour")
    }

    fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.slot[u].iter().position(|&x| x == Some(v))
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.slot[u][c] = Some(v);
        self.slot[v][c] = Some(u);
    }

    fn clear(&mut self, u: usize, v: usize) {
        if let Some(c) = self.color_of(u, v) {
            self.slot[u][c] = None;
            self.slot[v][c] = None;
        }
    }
}

/// Colours the edges of `g` with at most `Δ(g) + 1` colours.
///
/// Edges are processed in lexicographic order; each uncoloured edge
/// `(x, f0)` is coloured by building a maximal fan at `x`, inverting the
/// `cd`-alternating path from `x` and rotating a prefix of the fan. A final
/// pass tries to move every edge off colour `Δ` by a single Kempe swap,
/// which always succeeds on bipartite graphs.
pub fn edge_color(g: &Graph) -> EdgeColoring {
    let edges = g.edge_list();
    let palette_size = g.max_degree() + 1;
    let mut pal = Palette {
        slot: vec![vec![None; palette_size]; g.order()],
    };
    for &(x, f0) in &edges {
        color_edge(g, &mut pal, x, f0);
    }
    if palette_size > 1 {
        for &(u, v) in &edges {
            shed_top_color(&mut pal, u, v, palette_size - 1);
        }
    }
    let colors = edges
        .iter()
        .map(|&(u, v)| pal.color_of(u, v).expect("every edge coloured"))
        .collect();
    EdgeColoring { edges, colors }
}

fn color_edge(g: &Graph, pal: &mut Palette, x: usize, f0: usize) {
    // maximal fan: fan[i+1] is a neighbour of x whose edge colour is free on fan[i]
    let mut fan = vec![f0];
    let mut in_fan = vec![f0];
    loop {
        let last = *fan.last().unwrap();
        let next = g.neighbors(x).iter().copied().find(|&w| {
            !in_fan.contains(&w)
                && pal
                    .color_of(x, w)
                    .is_some_and(|c| pal.is_free(last, c))
        });
        match next {
            Some(w) => {
                fan.push(w);
                in_fan.push(w);
            }
            None => break,
        }
    }

    let c = pal.first_free(x);
    let d = pal.first_free(*fan.last().unwrap());
    if c != d {
        invert_path(pal, x, c, d);
    }

    // after inversion d is free on x; find a fan prefix ending at a vertex with d free
    let w = (0..fan.len())
        .find(|&w| pal.is_free(fan[w], d) && is_fan(pal, x, &fan[..=w]))
        .expect("Misra–Gries invariant: some fan prefix admits colour d");

    let shifted: Vec<usize> = (1..=w)
        .map(|i| pal.color_of(x, fan[i]).expect("fan edges are coloured"))
        .collect();
    for &f in &fan[1..=w] {
        pal.clear(x, f);
    }
    for (i, &col) in shifted.iter().enumerate() {
        pal.set(x, fan[i], col);
    }
    pal.set(x, fan[w], d);
}

fn shed_top_color(pal: &mut Palette, u: usize, v: usize, top: usize) {
    if pal.color_of(u, v) != Some(top) {
        return;
    }
    pal.clear(u, v);
    let free_below = |pal: &Palette, w: usize| (0..top).filter(|&c| pal.is_free(w, c)).collect::<Vec<_>>();
    let (fu, fv) = (free_below(pal, u), free_below(pal, v));
    if let Some(&c) = fu.iter().find(|c| fv.contains(c)) {
        pal.set(u, v, c);
        return;
    }
    if let (Some(&a), Some(&b)) = (fu.first(), fv.first()) {
        invert_path(pal, v, b, a);
        if pal.is_free(u, a) && pal.is_free(v, a) {
            pal.set(u, v, a);
            return;
        }
        invert_path(pal, v, a, b);
    }
    pal.set(u, v, top);
}

fn is_fan(pal: &Palette, x: usize, fan: &[usize]) -> bool {
    fan.windows(2).all(|pair| {
        pal.color_of(x, pair[1])
            .is_some_and(|c| pal.is_free(pair[0], c))
    })
}

/// Swaps colours `c` and `d` along the maximal path starting at `x` whose
/// first edge has colour `d` (`c` is free on `x`).
fn invert_path(pal: &mut Palette, x: usize, c: usize, d: usize) {
    let mut path = Vec::new();
    let mut cur = x;
    let mut want = d;
    while let Some(next) = pal.slot[cur][want] {
        path.push((cur, next, want));
        cur = next;
        want = if want == d { c } else { d };
    }
    for &(u, v, _) in &path {
        pal.clear(u, v);
    }
    for &(u, v, col) in &path {
        let swapped = if col == d { c } else { d };
        pal.set(u, v, swapped);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn check(g: &Graph) -> EdgeColoring {
        let col = edge_color(g);
        assert!(col.is_proper(g));
        assert!(col.num_colors() <= g.max_degree() + 1);
        col
    }

    #[test]
    fn odd_cycle_needs_three() {
        assert_eq!(check(&named::cycle(5)).num_colors(), 3);
    }

    #[test]
    fn class_one_graphs_use_delta() {
        assert_eq!(check(&named::complete(4)).num_colors(), 3);
        assert_eq!(check(&named::cycle(6)).num_colors(), 2);
        assert_eq!(check(&named::complete_bipartite(3, 3)).num_colors(), 3);
        assert_eq!(check(&named::heawood()).num_colors(), 3);
    }

    #[test]
    fn star_uses_degree_many() {
        assert_eq!(check(&named::star(4)).num_colors(), 4);
    }

    #[test]
    fn assorted_graphs_within_vizing_bound() {
        check(&named::complete_bipartite(3, 3));
        check(&named::petersen());
        check(&named::complete(7));
        check(&named::complete(8));
        check(&named::heawood());
        check(&Graph::empty(3));
    }
}
