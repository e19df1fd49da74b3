//! Execution policy for the data-parallel loops (girth sweeps, cycle
//! enumeration, erasure-pattern verification).
//!
//! With the `parallel` feature the loops run on rayon; without it every
//! policy degrades to the sequential path. Results never depend on the
//! policy: reductions are order-independent or re-sorted afterwards.

/// Which execution path a data-parallel routine should take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub(crate) fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Caps the number of worker threads used by the parallel path. Returns
/// `false` when the global pool was already initialised or the crate was
/// built without the `parallel` feature.
pub fn configure_threads(threads: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        false
    }
}

/// Maps `f` over `0..len` and collects in index order.
pub(crate) fn map_range<T, F>(exec: Exec, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

/// Folds `f` over `0..len` with an associative, commutative `combine`.
pub(crate) fn reduce_range<T, F, C>(exec: Exec, len: usize, identity: T, f: F, combine: C) -> T
where
    T: Send + Sync + Clone,
    F: Fn(usize) -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..len)
            .into_par_iter()
            .map(f)
            .reduce(|| identity.clone(), &combine);
    }
    let _ = exec;
    (0..len).map(f).fold(identity, combine)
}
