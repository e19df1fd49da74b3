//! Exact rates and the optimal-rate bound.

use num_rational::Ratio;
use serde::Serialize;

use super::SeqRecCode;

/// Best achievable rate of a binary code with locality `r` recovering `t`
/// erasures sequentially. With `s = ⌊t/2⌋`:
///
/// * `t` even: `r^s / (r^s + 2 Σ_{j=0}^{s-1} r^j)`
/// * `t` odd: `r^{s+1} / (r^{s+1} + 2 Σ_{j=1}^{s} r^j + 1)`
pub fn optimal_rate(r: u64, t: u64) -> Ratio<u64> {
    let s = (t / 2) as u32;
    if t.is_multiple_of(2) {
        let top = r.pow(s);
        let sum: u64 = (0..s).map(|j| r.pow(j)).sum();
        Ratio::new(top, top + 2 * sum)
    } else {
        let top = r.pow(s + 1);
        let sum: u64 = (1..=s).map(|j| r.pow(j)).sum();
        Ratio::new(top, top + 2 * sum + 1)
    }
}

/// `n >= r^((t+1)/2)`, compared as `n^2 >= r^(t+1)`.
pub fn moore_floor_met(n: usize, r: usize, t: usize) -> bool {
    let bound = (r as u128).checked_pow(t as u32 + 1);
    bound.is_some_and(|b| (n as u128) * (n as u128) >= b)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateReport {
    pub n: usize,
    pub k: usize,
    #[serde(serialize_with = "ratio_string")]
    pub rate: Ratio<u64>,
    #[serde(serialize_with = "ratio_string")]
    pub optimal: Ratio<u64>,
    /// `k/n >= optimal`.
    pub meets_optimal: bool,
    pub equals_optimal: bool,
    /// `r^((t+1)/2)`.
    pub moore_floor: f64,
    pub meets_moore_floor: bool,
}

fn ratio_string<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn rate_report(code: &SeqRecCode) -> RateReport {
    let (n, k) = (code.n(), code.dimension());
    let rate = Ratio::new(k as u64, n.max(1) as u64);
    let optimal = optimal_rate(code.r as u64, code.t as u64);
    RateReport {
        n,
        k,
        rate,
        optimal,
        meets_optimal: rate >= optimal,
        equals_optimal: rate == optimal,
        moore_floor: (code.r as f64).powf((code.t as f64 + 1.0) / 2.0),
        meets_moore_floor: moore_floor_met(n, code.r, code.t),
    }
}
