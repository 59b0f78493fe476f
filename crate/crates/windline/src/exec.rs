//! Execution helpers for data-parallel inner loops.
//!
//! Independent work items (segments of a cycle, exclusion radii of a
//! principal-value schedule, declared singularities) are mapped with
//! [`map_ordered`], which runs on the current rayon pool when the `parallel`
//! feature is enabled and sequentially otherwise. Results are collected in
//! input order and reduced sequentially afterwards, so the numerical output
//! is bitwise identical regardless of thread count.

/// Maps `f` over `items`, preserving input order in the output.
#[cfg(feature = "parallel")]
pub(crate) fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Maps `f` over `items`, preserving input order in the output.
#[cfg(not(feature = "parallel"))]
pub(crate) fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Runs `job` with internal parallelism capped at `threads` worker threads.
///
/// `threads == 1` forces effectively sequential execution. Used by the
/// benchmark suite to compare the parallel and sequential paths, and by the
/// CLI to honor `WINDLINE_THREADS`. Without the `parallel` feature this is
/// a plain call.
#[cfg(feature = "parallel")]
pub fn with_thread_cap<R, F>(threads: usize, job: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("failed to build thread pool")
        .install(job)
}

/// Runs `job` with internal parallelism capped at `threads` worker threads.
#[cfg(not(feature = "parallel"))]
pub fn with_thread_cap<R, F>(threads: usize, job: F) -> R
where
    F: FnOnce() -> R,
{
    let _ = threads;
    job()
}

/// Installs a process-global thread cap from the `WINDLINE_THREADS`
/// environment variable, if set. Call once at startup; later calls are
/// ignored by rayon. No-op when the variable is unset or unparsable, and
/// without the `parallel` feature.
pub fn init_thread_cap_from_env() {
    #[cfg(feature = "parallel")]
    {
        if let Some(n) = std::env::var("WINDLINE_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
        {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_ordered_preserves_order() {
        let items: Vec<u64> = (0..1000).collect();
        let out = map_ordered(&items, |x| x * 2);
        assert_eq!(out, (0..1000).map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn thread_cap_runs_job() {
        let v = with_thread_cap(1, || map_ordered(&[1, 2, 3], |x| x + 1));
        assert_eq!(v, vec![2, 3, 4]);
    }
}
