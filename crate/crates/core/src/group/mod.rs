//! Finite groups with elements canonicalised to dense indices.
//!
//! Element `0` is always the identity. Groups of order at most
//! [`TABLE_LIMIT`] carry a precomputed multiplication table; larger groups
//! multiply on demand through their concrete representation.

mod cayley;
mod spec;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use cayley::{
    cayley_girth, cayley_girth_at_least, cayley_graph, find_generator_set, find_half_generator_set,
    split_half_set, GeneratorSet, HalfSet,
};
pub use spec::parse_group_spec;

/// Largest order for which a full multiplication table is materialised.
pub const TABLE_LIMIT: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutation closure exceeds cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator set is not closed under inverses")]
    NotSymmetric,
    #[error("generator set contains the identity")]
    IdentityInGenerators,
    #[error("generator set contains element {0} twice")]
    DuplicateGenerator(u32),
    #[error("element {0} is outside the group")]
    ElementOutOfRange(u32),
    #[error("no generator set found within {attempts} attempts; try a larger group")]
    SearchExhausted { attempts: usize },
    #[error("group spec: {0}")]
    Parse(String),
}

/// Dense index of a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A permutation of `0..degree` stored as its image list.
pub type Perm = Vec<u16>;

#[derive(Debug)]
struct PermRepr {
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

#[derive(Debug)]
enum Repr {
    Cyclic(usize),
    Product(FiniteGroup, FiniteGroup),
    Perm(PermRepr),
}

#[derive(Debug)]
struct Inner {
    order: usize,
    repr: Repr,
    inverse: Vec<u32>,
    table: Option<Vec<u16>>,
    spec: String,
}

/// A finite group; cheap to clone and safe to share across threads.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    inner: Arc<Inner>,
}

impl FiniteGroup {
    fn assemble(order: usize, repr: Repr, spec: String) -> Self {
        let mut inner = Inner {
            order,
            repr,
            inverse: Vec::new(),
            table: None,
            spec,
        };
        if order <= TABLE_LIMIT && !matches!(inner.repr, Repr::Cyclic(_)) {
            let mut table = vec![0u16; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = inner.mul_slow(a as u32, b as u32) as u16;
                }
            }
            inner.table = Some(table);
        }
        inner.inverse = (0..order as u32).map(|a| inner.inv_slow(a)).collect();
        FiniteGroup { inner: Arc::new(inner) }
    }

    /// `Z_m` under addition; element `i` is the residue `i`.
    pub fn cyclic(m: usize) -> Self {
        assert!(m >= 1, "cyclic group needs m >= 1");
        Self::assemble(m, Repr::Cyclic(m), format!("cyclic {m}"))
    }

    /// `A × B`; element `a + |A|·b` is the pair `(a, b)`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let spec = format!("product {} {}", a.spec(), b.spec());
        Self::assemble(a.order() * b.order(), Repr::Product(a.clone(), b.clone()), spec)
    }

    /// Closure of the given permutations (images of `0..degree`), enumerated
    /// breadth-first from the identity.
    pub fn permutation_group(generators: &[Perm], cap: usize) -> Result<Self, GroupError> {
        let degree = generators.iter().map(Vec::len).max().unwrap_or(0);
        let gens: Vec<Perm> = generators
            .iter()
            .map(|g| {
                let mut p = g.clone();
                p.extend(p.len() as u16..degree as u16);
                validate_perm(&p).map(|_| p)
            })
            .collect::<Result<_, _>>()?;
        let identity: Perm = (0..degree as u16).collect();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0u32)]);
        let mut head = 0;
        while head < elements.len() {
            for g in &gens {
                let next = compose(&elements[head], g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(GroupError::ClosureExceedsCap { cap });
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
            head += 1;
        }
        let spec = std::iter::once("perm".to_string())
            .chain(gens.iter().map(|g| cycle_notation(g)))
            .collect::<Vec<_>>()
            .join(" ");
        let order = elements.len();
        Ok(Self::assemble(order, Repr::Perm(PermRepr { elements, index }), spec))
    }

    /// The symmetric group on `n` points, generated by `(1 2)` and `(1 … n)`.
    pub fn symmetric(n: usize, cap: usize) -> Result<Self, GroupError> {
        if n < 2 {
            return Self::permutation_group(&[], cap);
        }
        let transposition: Perm = (0..n as u16).map(|i| match i {
            0 => 1,
            1 => 0,
            _ => i,
        }).collect();
        let rotation: Perm = (0..n as u16).map(|i| (i + 1) % n as u16).collect();
        Self::permutation_group(&[transposition, rotation], cap)
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> Elem {
        Elem(0)
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.index() < self.order()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order() as u32).map(Elem)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        match &inner.table {
            Some(t) => Elem(t[a.index() * inner.order + b.index()] as u32),
            None => Elem(inner.mul_slow(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inner.inverse[a.index()])
    }

    pub fn is_involution(&self, a: Elem) -> bool {
        a != self.identity() && self.inv(a) == a
    }

    /// Product of a sequence, left to right.
    pub fn product<I: IntoIterator<Item = Elem>>(&self, word: I) -> Elem {
        word.into_iter().fold(self.identity(), |acc, x| self.mul(acc, x))
    }

    /// Text form accepted by [`parse_group_spec`].
    pub fn spec(&self) -> &str {
        &self.inner.spec
    }

    /// The permutation behind an element, for permutation groups.
    pub fn as_permutation(&self, a: Elem) -> Option<&Perm> {
        match &self.inner.repr {
            Repr::Perm(p) => p.elements.get(a.index()),
            _ => None,
        }
    }
}

impl Inner {
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        match &self.repr {
            Repr::Cyclic(m) => ((a as u64 + b as u64) % *m as u64) as u32,
            Repr::Product(x, y) => {
                let n = x.order() as u32;
                let first = x.mul(Elem(a % n), Elem(b % n)).0;
                let second = y.mul(Elem(a / n), Elem(b / n)).0;
                first + n * second
            }
            Repr::Perm(p) => {
                let c = compose(&p.elements[a as usize], &p.elements[b as usize]);
                p.index[&c]
            }
        }
    }

    fn inv_slow(&self, a: u32) -> u32 {
        match &self.repr {
            Repr::Cyclic(m) => (*m as u32 - a) % *m as u32,
            Repr::Product(x, y) => {
                let n = x.order() as u32;
                x.inv(Elem(a % n)).0 + n * y.inv(Elem(a / n)).0
            }
            Repr::Perm(p) => {
                let perm = &p.elements[a as usize];
                let mut inv = vec![0u16; perm.len()];
                for (i, &img) in perm.iter().enumerate() {
                    inv[img as usize] = i as u16;
                }
                p.index[&inv]
            }
        }
    }
}

/// `x` then `y`: the image of `i` is `y[x[i]]`.
fn compose(x: &[u16], y: &[u16]) -> Perm {
    x.iter().map(|&i| y[i as usize]).collect()
}

fn validate_perm(p: &[u16]) -> Result<(), GroupError> {
    let mut seen = vec![false; p.len()];
    for &i in p {
        let i = i as usize;
        if i >= p.len() || seen[i] {
            return Err(GroupError::InvalidPermutation(format!("{p:?} is not a bijection")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// 1-based cycle notation such as `(1,2,3)(4,5)`; the identity is `()`.
pub fn cycle_notation(p: &[u16]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(","));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses 1-based cycle notation (`(1,2,3)(4,5)`, spaces also accepted as
/// separators) into an image list on `0..degree`.
pub fn parse_cycles(text: &str) -> Result<Perm, GroupError> {
    let bad = || GroupError::InvalidPermutation(text.to_string());
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = body.find(')').ok_or_else(bad)?;
        let points: Vec<usize> = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().ok().filter(|&x| x >= 1).ok_or_else(bad))
            .collect::<Result<_, _>>()?;
        cycles.push(points);
        rest = body[close + 1..].trim_start();
    }
    let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
    let mut perm: Perm = (0..degree as u16).collect();
    let mut moved = vec![false; degree];
    for cycle in &cycles {
        for (k, &x) in cycle.iter().enumerate() {
            if moved[x - 1] {
                return Err(bad());
            }
            moved[x - 1] = true;
            perm[x - 1] = (cycle[(k + 1) % cycle.len()] - 1) as u16;
        }
    }
    Ok(perm)
}
