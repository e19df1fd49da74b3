//! Oracles written independently of the library, for cross-checking it.
#![allow(dead_code)]

use std::collections::VecDeque;

use seqrec::Graph;

/// Exact girth by BFS from every vertex; `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Rank over GF(2) of the matrix whose rows have the given supports.
pub fn rank(n: usize, rows: &[Vec<usize>]) -> usize {
    let words = n.div_ceil(64);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![0u64; words];
            for &c in r {
                v[c / 64] ^= 1 << (c % 64);
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..m.len()).find(|&i| m[i][w] & b != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Sequential recovery by repeatedly using any check with exactly one
/// erased symbol. Returns whether everything was recovered.
pub fn peels(rows: &[Vec<usize>], n: usize, erased: &[usize]) -> bool {
    let mut gone = vec![false; n];
    for &e in erased {
        gone[e] = true;
    }
    let mut left = erased.len();
    loop {
        let mut progress = false;
        for row in rows {
            let missing: Vec<usize> = row.iter().copied().filter(|&c| gone[c]).collect();
            if missing.len() == 1 {
                gone[missing[0]] = false;
                left -= 1;
                progress = true;
            }
        }
        if left == 0 {
            return true;
        }
        if !progress {
            return false;
        }
    }
}

/// Brute force: the erased symbols are determined by the rest iff no
/// nonzero codeword is supported inside the erasure set.
pub fn solvable(rows: &[Vec<usize>], erased: &[usize]) -> bool {
    let k = erased.len();
    for mask in 1u64..(1 << k) {
        let in_word = |c: usize| erased.iter().position(|&e| e == c).is_some_and(|i| mask >> i & 1 == 1);
        if rows.iter().all(|r| r.iter().filter(|&&c| in_word(c)).count() % 2 == 0) {
            return false;
        }
    }
    true
}

/// Every base edge lifts to a perfect matching between the two fibres,
/// there are no other edges, and each copy keeps its base vertex's layer.
pub fn is_covering(base: &Graph, lift: &Graph, m: usize) -> Result<(), String> {
    if lift.order() != base.order() * m {
        return Err("wrong order".into());
    }
    let fibre = |v: usize| v / m;
    for v in 0..lift.order() {
        if lift.tag(v).layer != base.tag(fibre(v)).layer {
            return Err(format!("layer of {v} changed"));
        }
    }
    for (u, v) in lift.edges() {
        if !base.has_edge(fibre(u), fibre(v)) {
            return Err(format!("edge {u}-{v} is not over a base edge"));
        }
    }
    for (a, b) in base.edges() {
        let mut hits_a = vec![0usize; m];
        let mut hits_b = vec![0usize; m];
        for (i, hits) in hits_a.iter_mut().enumerate() {
            for &w in lift.neighbors(a * m + i) {
                if fibre(w) == b {
                    *hits += 1;
                    hits_b[w % m] += 1;
                }
            }
        }
        if hits_a.iter().chain(&hits_b).any(|&h| h != 1) {
            return Err(format!("edge {a}-{b} does not lift to a perfect matching"));
        }
    }
    Ok(())
}

/// Number of cycles of length `len` through the edge `u-v`, counted as
/// simple paths `v -> u` of length `len - 1` avoiding the edge itself.
pub fn cycles_through(g: &Graph, u: usize, v: usize, len: usize) -> usize {
    fn walk(g: &Graph, at: usize, target: usize, left: usize, on: &mut [bool]) -> usize {
        if left == 0 {
            return usize::from(at == target);
        }
        let mut total = 0;
        for &w in g.neighbors(at) {
            if on[w] || (w == target && left != 1) {
                continue;
            }
            on[w] = true;
            total += walk(g, w, target, left - 1, on);
            on[w] = false;
        }
        total
    }
    let mut on = vec![false; g.order()];
    on[v] = true;
    // the direct step v -> u is excluded because len - 1 >= 2
    walk(g, v, u, len - 1, &mut on)
}

/// All subsets of `0..n` of size exactly `k`, in lexicographic order.
pub fn subsets(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
