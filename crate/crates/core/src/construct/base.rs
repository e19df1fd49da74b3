//! Base graph library.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{complete_layers, layer_count, lcm, BaseKind, ConstructError, LayeredGraph};
use crate::graph::{disjoint_union, named, random, Graph, Layer};

const RANDOM_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BaseSpec {
    /// `complete` for even `t`, `complete-bipartite` for odd `t`.
    #[default]
    Auto,
    /// The Petersen graph (`r = 3`, even `t`).
    Petersen,
    /// `K_{4,3}` (`r = 3`, odd `t`).
    K43,
    /// `K_{r+1}` (even `t`).
    Complete,
    /// `K_{r+1,r}` (odd `t`).
    CompleteBipartite,
    /// An `r`-regular circulant (even `t`).
    Circulant,
    /// Pairing-model random regular or biregular graph.
    Random,
}

impl BaseSpec {
    pub fn resolve(self, t: usize) -> BaseSpec {
        match (self, t % 2) {
            (BaseSpec::Auto, 0) => BaseSpec::Complete,
            (BaseSpec::Auto, _) => BaseSpec::CompleteBipartite,
            (b, _) => b,
        }
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseSpec::Auto => "auto",
            BaseSpec::Petersen => "petersen",
            BaseSpec::K43 => "k43",
            BaseSpec::Complete => "complete",
            BaseSpec::CompleteBipartite => "complete-bipartite",
            BaseSpec::Circulant => "circulant",
            BaseSpec::Random => "random",
        })
    }
}

impl FromStr for BaseSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "auto" => BaseSpec::Auto,
            "petersen" => BaseSpec::Petersen,
            "k43" => BaseSpec::K43,
            "complete" => BaseSpec::Complete,
            "complete-bipartite" => BaseSpec::CompleteBipartite,
            "circulant" => BaseSpec::Circulant,
            "random" => BaseSpec::Random,
            _ => return Err(format!("unknown base graph `{s}`")),
        })
    }
}

/// The base graph `G_0` for `(r, t)` with all `s` layers stacked on top.
///
/// `|U_0|` is at least `size_hint` and a multiple of `r^(s-1)` (even `t`)
/// or of `lcm(r + 1, r^(s-1))` (odd `t`), so no layer step needs further
/// replication. Named bases are replicated to reach the size; random and
/// circulant bases are generated at the size directly.
pub fn build_base_graph(
    r: usize,
    t: usize,
    base: BaseSpec,
    size_hint: usize,
    seed: u64,
) -> Result<LayeredGraph, ConstructError> {
    let infeasible = |m: String| Err(ConstructError::InfeasibleParams(m));
    if r < 3 {
        return infeasible(format!("locality r = {r} must be at least 3"));
    }
    if t < 2 {
        return infeasible(format!("t = {t} must be at least 2"));
    }
    let s = layer_count(t);
    let top_power = (r as u128)
        .checked_pow((s - 1) as u32)
        .filter(|&p| p <= 1 << 32)
        .ok_or_else(|| ConstructError::InfeasibleParams(format!("r^(s-1) overflows for r = {r}, t = {t}")))?
        as usize;
    let odd = t % 2 == 1;
    let quantum = if odd { lcm(r + 1, top_power) } else { top_power };
    let kind = if odd { BaseKind::OddBase } else { BaseKind::EvenBase };
    let base = base.resolve(t);

    let named_base = |g: Graph, u0: usize| -> Result<LayeredGraph, ConstructError> {
        let copies = copies_needed(u0, quantum, size_hint);
        let g = if copies == 1 { g } else { disjoint_union(&vec![g; copies]) };
        Ok(layered(g, u0, copies, r, t, kind))
    };
    let needs = |want_odd: bool, name: &str| {
        if odd != want_odd {
            let parity = if want_odd { "odd" } else { "even" };
            Err(ConstructError::InfeasibleParams(format!("base `{name}` needs {parity} t")))
        } else {
            Ok(())
        }
    };
    let lg = match base {
        BaseSpec::Auto => unreachable!(),
        BaseSpec::Petersen => {
            needs(false, "petersen")?;
            if r != 3 {
                return infeasible("base `petersen` needs r = 3".into());
            }
            named_base(named::petersen(), 10)?
        }
        BaseSpec::K43 => {
            needs(true, "k43")?;
            if r != 3 {
                return infeasible("base `k43` needs r = 3".into());
            }
            named_base(named::complete_bipartite(4, 3), 4)?
        }
        BaseSpec::Complete => {
            needs(false, "complete")?;
            named_base(named::complete(r + 1), r + 1)?
        }
        BaseSpec::CompleteBipartite => {
            needs(true, "complete-bipartite")?;
            named_base(named::complete_bipartite(r + 1, r), r + 1)?
        }
        BaseSpec::Circulant => {
            needs(false, "circulant")?;
            let step = if r % 2 == 1 { lcm(quantum, 2) } else { quantum };
            let n = round_up(size_hint.max(r + 1), step);
            let g = named::regular_circulant(n, r)
                .or_else(|| named::regular_circulant(n + step, r))
                .ok_or_else(|| ConstructError::InfeasibleParams(format!("no {r}-regular circulant near {n}")))?;
            let u0 = g.order();
            layered(g, u0, 1, r, t, kind)
        }
        BaseSpec::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if odd {
                let u0 = round_up(size_hint.max(r + 1), quantum);
                let l0 = r * u0 / (r + 1);
                let g = random::random_biregular(u0, r, l0, r + 1, &mut rng, RANDOM_ATTEMPTS)
                    .ok_or_else(|| ConstructError::InfeasibleParams(format!("no simple biregular pairing on {u0}+{l0}")))?;
                layered(g, u0, 1, r, t, kind)
            } else {
                let step = if r % 2 == 1 { lcm(quantum, 2) } else { quantum };
                let n = round_up(size_hint.max(r + 1), step);
                let g = random::random_regular(n, r, &mut rng, RANDOM_ATTEMPTS)
                    .ok_or_else(|| ConstructError::InfeasibleParams(format!("no simple {r}-regular pairing on {n}")))?;
                layered(g, n, 1, r, t, kind)
            }
        }
    };
    lg.validate()?;
    complete_layers(&lg)
}

fn round_up(x: usize, q: usize) -> usize {
    x.div_ceil(q) * q
}

/// Least number of copies of a base with `u0` upper vertices such that the
/// total is a multiple of `quantum` and at least `hint`.
fn copies_needed(u0: usize, quantum: usize, hint: usize) -> usize {
    let unit = quantum / super::gcd(u0, quantum);
    let per_unit = unit * u0;
    unit * hint.div_ceil(per_unit).max(1)
}

/// Tags the first `u0` vertices of every copy as `U_0`, the rest as `L_0`.
fn layered(mut g: Graph, u0: usize, copies: usize, r: usize, t: usize, kind: BaseKind) -> LayeredGraph {
    let per_copy = g.order() / copies;
    for v in 0..g.order() {
        let layer = if v % per_copy < u0 { Layer::U(0) } else { Layer::L0 };
        g.set_layer(v, Some(layer));
    }
    LayeredGraph::from_tagged(g, r, t, kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bases() {
        let p = build_base_graph(3, 2, BaseSpec::Petersen, 10, 0).unwrap();
        assert_eq!(p.layers[0].len(), 10);
        assert!(p.lower.is_empty());

        let k = build_base_graph(3, 3, BaseSpec::K43, 4, 0).unwrap();
        assert_eq!(k.layers[0].len(), 4);
        assert_eq!(k.lower.len(), 3);
        assert!(k.layers[0].iter().all(|&v| k.graph.degree(v) == 3));
        assert!(k.lower.iter().all(|&v| k.graph.degree(v) == 4));

        let p4 = build_base_graph(3, 4, BaseSpec::Petersen, 10, 0).unwrap();
        assert_eq!(p4.layers[0].len(), 30);
        assert_eq!(p4.layers[1].len(), 10);
    }

    #[test]
    fn auto_and_generated_bases() {
        let k5 = build_base_graph(4, 2, BaseSpec::Auto, 0, 0).unwrap();
        assert_eq!(k5.graph, {
            let mut g = named::complete(5);
            (0..5).for_each(|v| g.set_layer(v, Some(Layer::U(0))));
            g
        });
        let k54 = build_base_graph(4, 3, BaseSpec::Auto, 0, 0).unwrap();
        assert_eq!((k54.layers[0].len(), k54.lower.len()), (5, 4));

        for t in [2, 4, 6] {
            for base in [BaseSpec::Circulant, BaseSpec::Random] {
                let lg = build_base_graph(3, t, base, 20, 7).unwrap();
                assert!(lg.layers[0].len() >= 20);
                assert!(lg.is_complete());
                lg.validate().unwrap();
            }
        }
        for t in [3, 5, 7] {
            let lg = build_base_graph(3, t, BaseSpec::Random, 10, 7).unwrap();
            assert_eq!(lg.layers[0].len() % 4, 0);
            assert!(lg.is_complete());
            lg.validate().unwrap();
        }
    }

    #[test]
    fn deterministic_random_base() {
        let a = build_base_graph(5, 4, BaseSpec::Random, 30, 42).unwrap();
        let b = build_base_graph(5, 4, BaseSpec::Random, 30, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn infeasible_requests() {
        let bad = [
            build_base_graph(2, 2, BaseSpec::Auto, 0, 0),
            build_base_graph(3, 1, BaseSpec::Auto, 0, 0),
            build_base_graph(4, 2, BaseSpec::Petersen, 0, 0),
            build_base_graph(3, 2, BaseSpec::K43, 0, 0),
            build_base_graph(3, 3, BaseSpec::Circulant, 0, 0),
            build_base_graph(3, 200, BaseSpec::Auto, 0, 0),
        ];
        for b in bad {
            assert!(matches!(b, Err(ConstructError::InfeasibleParams(_))), "{b:?}");
        }
    }
}
