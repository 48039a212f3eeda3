//! Deterministic "lowest index wins" search, optionally on a thread pool.

use rayon::prelude::*;

/// Returns `f(i)` for the smallest `i < count` where it is `Some`.
/// With `jobs > 1` the indices are evaluated on a pool of that size; the
/// result does not depend on `jobs`.
pub(crate) fn first_some<T, F>(count: u64, jobs: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    if jobs <= 1 {
        return (0..count).find_map(f);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| (0..count).into_par_iter().find_map_first(f))
}
