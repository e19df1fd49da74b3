//! Exhaustive or sampled checking that every erasure pattern of size at
//! most `t` peels.

use std::fmt;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{peel, SeqRecCode};
use crate::par::{self, Exec};

/// Failing patterns kept in a report; the count covers all of them.
const MAX_STORED_FAILURES: usize = 1000;
/// Random patterns drawn per parallel work item.
const SAMPLE_CHUNK: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyMode::Exhaustive => "exhaustive",
            VerifyMode::Sampled => "sampled",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub mode: VerifyMode,
    pub t: usize,
    /// Non-empty patterns decoded.
    pub patterns: u64,
    pub failure_count: u64,
    /// Sorted; at most a fixed number are kept.
    pub failures: Vec<Vec<usize>>,
    pub seed: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}, {} failures over {} patterns",
            self.mode, self.failure_count, self.patterns
        )
    }
}

/// `Σ_{i=0}^{t} C(n, i)`, saturating.
pub fn binomial_prefix_sum(n: usize, t: usize) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for i in 0..=t.min(n) {
        total = total.saturating_add(c);
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    total
}

#[derive(Clone, Default)]
struct Tally {
    patterns: u64,
    failure_count: u64,
    failures: Vec<Vec<usize>>,
}

impl Tally {
    fn check(&mut self, code: &SeqRecCode, pattern: &[usize]) {
        self.patterns += 1;
        if peel(code, pattern).is_err() {
            self.failure_count += 1;
            if self.failures.len() < MAX_STORED_FAILURES {
                let mut p = pattern.to_vec();
                p.sort_unstable();
                self.failures.push(p);
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.patterns += other.patterns;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self
    }
}

pub fn verify_seq_recovery(code: &SeqRecCode, t: usize, budget: u64, seed: u64) -> Report {
    verify_seq_recovery_with(code, t, budget, seed, Exec::default())
}

/// Decodes every pattern of size `1..=t` when `Σ_{i≤t} C(n, i) <= budget`.
/// Otherwise decodes `budget` seeded random patterns of size exactly `t`
/// (pattern `i` uses stream `i` of a ChaCha8 generator seeded with `seed`)
/// plus every single pendant symbol and every pair containing one.
pub fn verify_seq_recovery_with(code: &SeqRecCode, t: usize, budget: u64, seed: u64, exec: Exec) -> Report {
    let n = code.n();
    let t = t.min(n);
    let (mode, tally) = if binomial_prefix_sum(n, t) <= budget as u128 {
        let tally = par::reduce_range(
            exec,
            n,
            Tally::default(),
            |first| {
                let mut tally = Tally::default();
                let mut pattern = vec![first];
                extend_patterns(code, n, t, &mut pattern, &mut tally);
                tally
            },
            Tally::merge,
        );
        (VerifyMode::Exhaustive, tally)
    } else {
        let chunks = budget.div_ceil(SAMPLE_CHUNK as u64) as usize;
        let random = par::reduce_range(
            exec,
            chunks,
            Tally::default(),
            |c| {
                let mut tally = Tally::default();
                let start = c as u64 * SAMPLE_CHUNK as u64;
                let end = (start + SAMPLE_CHUNK as u64).min(budget);
                for i in start..end {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(i);
                    let pattern = sample(&mut rng, n, t).into_vec();
                    tally.check(code, &pattern);
                }
                tally
            },
            Tally::merge,
        );
        let pendants = code.pendant_symbols();
        let pendant_tally = par::reduce_range(
            exec,
            pendants.len(),
            Tally::default(),
            |i| {
                let d = pendants[i];
                let mut tally = Tally::default();
                tally.check(code, &[d]);
                if t >= 2 {
                    for x in 0..n {
                        // pairs of two pendants are visited once, from the smaller one
                        if x != d && !(code.h.cols[x].len() == 1 && x < d) {
                            tally.check(code, &[d, x]);
                        }
                    }
                }
                tally
            },
            Tally::merge,
        );
        (VerifyMode::Sampled, random.merge(pendant_tally))
    };
    let mut failures = tally.failures;
    failures.sort_unstable();
    failures.dedup();
    failures.truncate(MAX_STORED_FAILURES);
    Report {
        mode,
        t,
        patterns: tally.patterns,
        failure_count: tally.failure_count,
        failures,
        seed,
    }
}

/// Checks `pattern` and every extension by larger symbols up to size `t`.
fn extend_patterns(code: &SeqRecCode, n: usize, t: usize, pattern: &mut Vec<usize>, tally: &mut Tally) {
    tally.check(code, pattern);
    if pattern.len() == t {
        return;
    }
    for next in pattern.last().unwrap() + 1..n {
        pattern.push(next);
        extend_patterns(code, n, t, pattern, tally);
        pattern.pop();
    }
}
