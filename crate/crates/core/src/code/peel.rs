//! Sequential (peeling) recovery of erasures.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::SeqRecCode;

/// Recovery order: `(symbol, row)` means `row` meets the erasures still
/// pending at that point in `symbol` alone.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecoverySchedule {
    pub steps: Vec<(usize, usize)>,
}

impl RecoverySchedule {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Peeling got stuck: `residual` is a stopping set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeFailure {
    pub residual: Vec<usize>,
    pub partial: RecoverySchedule,
}

/// Repeatedly resolves the lowest-index row that meets the pending
/// erasures exactly once.
pub fn peel(code: &SeqRecCode, erased: &[usize]) -> Result<RecoverySchedule, DecodeFailure> {
    let h = &code.h;
    let mut pending: HashSet<usize> = erased.iter().copied().collect();
    let mut count: HashMap<usize, usize> = HashMap::new();
    for &s in &pending {
        for &row in &h.cols[s] {
            *count.entry(row).or_default() += 1;
        }
    }
    let mut ready: BTreeSet<usize> = count.iter().filter(|&(_, &c)| c == 1).map(|(&r, _)| r).collect();
    let mut steps = Vec::with_capacity(pending.len());
    while let Some(row) = ready.pop_first() {
        if count.get(&row) != Some(&1) {
            continue;
        }
        let sym = *h.rows[row]
            .iter()
            .find(|s| pending.contains(s))
            .expect("row with count one has a pending symbol");
        pending.remove(&sym);
        steps.push((sym, row));
        for &other in &h.cols[sym] {
            let c = count.get_mut(&other).expect("counted row");
            *c -= 1;
            if *c == 1 {
                ready.insert(other);
            }
        }
    }
    let partial = RecoverySchedule { steps };
    if pending.is_empty() {
        Ok(partial)
    } else {
        let mut residual: Vec<usize> = pending.into_iter().collect();
        residual.sort_unstable();
        Err(DecodeFailure { residual, partial })
    }
}

/// Fills the erased positions of `word` following the peeling schedule;
/// the input values at erased positions are ignored.
pub fn sequential_decode(
    code: &SeqRecCode,
    erased: &[usize],
    word: &[u8],
) -> Result<(RecoverySchedule, Vec<u8>), DecodeFailure> {
    let schedule = peel(code, erased)?;
    let mut out = word.to_vec();
    for &s in erased {
        out[s] = 0;
    }
    for &(sym, row) in &schedule.steps {
        out[sym] = code.h.rows[row]
            .iter()
            .filter(|&&c| c != sym)
            .fold(0, |acc, &c| acc ^ out[c]);
    }
    Ok((schedule, out))
}
