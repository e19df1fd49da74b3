//! Cayley graphs, symmetric generator sets and their inverse-free halves.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Elem, FiniteGroup, GroupError};
use crate::graph::{Girth, Graph, VertexTag};

/// A set of non-identity group elements, kept sorted by index together
/// with the inverse of each member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    elems: Vec<Elem>,
    inverses: Vec<Elem>,
    symmetric: bool,
}

impl GeneratorSet {
    pub fn new(h: &FiniteGroup, elems: &[Elem]) -> Result<Self, GroupError> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GroupError::DuplicateGenerator(w[0].0));
            }
        }
        for &s in &sorted {
            if !h.contains(s) {
                return Err(GroupError::ElementOutOfRange(s.0));
            }
            if s == h.identity() {
                return Err(GroupError::IdentityInGenerators);
            }
        }
        let inverses: Vec<Elem> = sorted.iter().map(|&s| h.inv(s)).collect();
        let symmetric = inverses.iter().all(|i| sorted.binary_search(i).is_ok());
        Ok(GeneratorSet {
            elems: sorted,
            inverses,
            symmetric,
        })
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    fn inverse_of(&self, i: usize) -> Elem {
        self.inverses[i]
    }
}

/// A subset of a symmetric generator set containing no element together
/// with its inverse, except that involutions are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSet {
    pub elems: Vec<Elem>,
}

impl HalfSet {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// Keeps every involution and, from each pair `{s, s⁻¹}`, the member with
/// the smaller index.
pub fn split_half_set(s: &GeneratorSet) -> Result<HalfSet, GroupError> {
    if !s.is_symmetric() {
        return Err(GroupError::NotSymmetric);
    }
    let elems = s
        .elems
        .iter()
        .enumerate()
        .filter(|&(i, &x)| x <= s.inverse_of(i))
        .map(|(_, &x)| x)
        .collect();
    Ok(HalfSet { elems })
}

/// `Cay(H, S)`: vertices are the elements of `H` (by index), edges
/// `{h, h·s}` for every `h ∈ H`, `s ∈ S`.
pub fn cayley_graph(h: &FiniteGroup, s: &GeneratorSet) -> Result<Graph, GroupError> {
    if !s.is_symmetric() {
        return Err(GroupError::NotSymmetric);
    }
    let mut edges = Vec::with_capacity(h.order() * s.len() / 2);
    for x in h.elements() {
        for &g in s.elems() {
            let y = h.mul(x, g);
            if x < y {
                edges.push((x.index(), y.index()));
            }
        }
    }
    let tags = (0..h.order()).map(VertexTag::identity).collect();
    Ok(Graph::from_edges_trusted(h.order(), &edges, tags))
}

/// Shortest cycle through the identity, found by BFS on the fly; equal to
/// the girth because Cayley graphs are vertex-transitive. The search stops
/// once no cycle shorter than `bound` can still be found, in which case
/// `usize::MAX` is returned.
fn shortest_cycle_through_identity(h: &FiniteGroup, s: &[Elem], bound: usize) -> usize {
    let mut seen: HashMap<Elem, (usize, Elem)> = HashMap::new();
    let e = h.identity();
    seen.insert(e, (0, e));
    let mut queue = vec![e];
    let mut head = 0;
    let mut best = usize::MAX;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let (du, pu) = seen[&u];
        if 2 * du + 1 >= best.min(bound) {
            break;
        }
        for &g in s {
            let w = h.mul(u, g);
            match seen.get(&w) {
                None => {
                    seen.insert(w, (du + 1, u));
                    queue.push(w);
                }
                Some(&(dw, _)) => {
                    if w != pu {
                        best = best.min(du + dw + 1);
                    }
                }
            }
        }
    }
    best
}

/// Girth of `Cay(H, S)` without materialising the graph.
pub fn cayley_girth(h: &FiniteGroup, s: &GeneratorSet) -> Girth {
    match shortest_cycle_through_identity(h, s.elems(), usize::MAX) {
        usize::MAX => Girth::Infinite,
        g => Girth::Finite(g),
    }
}

pub fn cayley_girth_at_least(h: &FiniteGroup, s: &GeneratorSet, k: usize) -> bool {
    shortest_cycle_through_identity(h, s.elems(), k) >= k
}

/// Randomised search for a symmetric `S` with `|S| >= min_size` and
/// `girth(Cay(H, S)) >= min_girth`.
pub fn find_generator_set(
    h: &FiniteGroup,
    min_size: usize,
    min_girth: usize,
    budget: usize,
    seed: u64,
) -> Result<GeneratorSet, GroupError> {
    search(h, min_girth, budget, seed, |s| s.len() >= min_size)
}

/// Like [`find_generator_set`] but sized by the half set: returns `S` with
/// `|split_half_set(S)| >= min_half`. Involutions count fully towards the
/// half set, which keeps the group needed for a given girth small.
pub fn find_half_generator_set(
    h: &FiniteGroup,
    min_half: usize,
    min_girth: usize,
    budget: usize,
    seed: u64,
) -> Result<GeneratorSet, GroupError> {
    search(h, min_girth, budget, seed, |s| {
        split_half_set(s).map(|half| half.len() >= min_half).unwrap_or(false)
    })
}

/// Greedy randomised growth: draw a random non-identity element, add it
/// with its inverse if the Cayley girth stays at or above `min_girth`, and
/// restart from scratch after a run of rejections. Every draw costs one
/// unit of `budget`. Half of the draws come from the involutions of `H`,
/// when it has any.
fn search<F>(h: &FiniteGroup, min_girth: usize, budget: usize, seed: u64, done: F) -> Result<GeneratorSet, GroupError>
where
    F: Fn(&GeneratorSet) -> bool,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let involutions: Vec<Elem> = h.elements().filter(|&x| h.is_involution(x)).collect();
    let restart_after = 64.max(h.order().min(512));
    let mut current: Vec<Elem> = Vec::new();
    let mut rejections = 0;
    let mut set = GeneratorSet::new(h, &current)?;
    for _ in 0..budget {
        if done(&set) {
            return Ok(set);
        }
        if h.order() < 2 {
            break;
        }
        let x = if !involutions.is_empty() && rng.gen_bool(0.5) {
            *involutions.choose(&mut rng).unwrap()
        } else {
            Elem(rng.gen_range(1..h.order() as u32))
        };
        if current.contains(&x) {
            rejections += 1;
        } else {
            let mut trial = current.clone();
            trial.push(x);
            if h.inv(x) != x {
                trial.push(h.inv(x));
            }
            if shortest_cycle_through_identity(h, &trial, min_girth) >= min_girth {
                current = trial;
                set = GeneratorSet::new(h, &current)?;
                rejections = 0;
            } else {
                rejections += 1;
            }
        }
        if rejections >= restart_after {
            current.clear();
            set = GeneratorSet::new(h, &current)?;
            rejections = 0;
        }
    }
    if done(&set) {
        return Ok(set);
    }
    Err(GroupError::SearchExhausted { attempts: budget })
}
