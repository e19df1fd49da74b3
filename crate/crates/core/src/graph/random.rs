//! Seeded random graph generators based on the pairing (configuration)
//! model with rejection of pairings that produce loops or multi-edges.

use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;

/// Uniform-ish random `d`-regular simple graph on `n` vertices. Returns
/// `None` if `n * d` is odd, `d >= n`, or no simple pairing was found in
/// `attempts` tries.
pub fn random_regular<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R, attempts: usize) -> Option<Graph> {
    if (n * d) % 2 == 1 || (d >= n && d > 0) {
        return None;
    }
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    for _ in 0..attempts {
        points.shuffle(rng);
        let edges: Vec<(usize, usize)> = points
            .chunks_exact(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if let Ok(g) = Graph::from_edges(n, edges) {
            return Some(g);
        }
    }
    None
}

/// Random bipartite graph with `left` vertices of degree `dl` (indices
/// `0..left`) and `right` vertices of degree `dr` (indices after them).
pub fn random_biregular<R: Rng + ?Sized>(
    left: usize,
    dl: usize,
    right: usize,
    dr: usize,
    rng: &mut R,
    attempts: usize,
) -> Option<Graph> {
    if left * dl != right * dr || dl > right || dr > left {
        return None;
    }
    let stubs: Vec<usize> = (0..left).flat_map(|v| std::iter::repeat_n(v, dl)).collect();
    let mut other: Vec<usize> = (0..right)
        .flat_map(|v| std::iter::repeat_n(left + v, dr))
        .collect();
    for _ in 0..attempts {
        other.shuffle(rng);
        let edges = stubs.iter().copied().zip(other.iter().copied());
        if let Ok(g) = Graph::from_edges(left + right, edges) {
            return Some(g);
        }
    }
    None
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("G(n,p) is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_degrees_and_seed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = random_regular(20, 3, &mut rng, 1000).unwrap();
        assert!(g.is_regular(3));
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(random_regular(20, 3, &mut rng2, 1000).unwrap(), g);

        let b = random_biregular(12, 3, 9, 4, &mut rng, 1000).unwrap();
        assert!(b.is_bipartite());
        assert!((0..12).all(|v| b.degree(v) == 3));
        assert!((12..21).all(|v| b.degree(v) == 4));

        assert!(random_regular(7, 3, &mut rng, 10).is_none());
        assert!(random_biregular(4, 3, 4, 4, &mut rng, 10).is_none());
    }
}
