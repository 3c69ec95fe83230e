//! Chunked parallel execution with an explicit worker count.
//!
//! Algorithms express each phase as a map over fixed-size chunks of a slice
//! (or an index range) and combine the per-chunk outputs sequentially. Chunk
//! boundaries depend only on the input length and grain size, never on the
//! worker count, so per-chunk results land in the same order regardless of
//! scheduling. A single-worker run goes through the identical chunk loop —
//! it is the degenerate case, not a separate implementation.

/// Worker count and loop grain for one algorithm invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExecPolicy {
    pub workers: usize,
    /// Items per scheduled chunk.
    pub grain: usize,
}

pub const DEFAULT_GRAIN: usize = 256;

impl ExecPolicy {
    pub fn new(workers: usize, grain: usize) -> Self {
        ExecPolicy {
            workers: workers.max(1),
            grain: grain.max(1),
        }
    }
}

impl Default for ExecPolicy {
    fn default() -> Self {
        ExecPolicy::new(1, DEFAULT_GRAIN)
    }
}

impl From<usize> for ExecPolicy {
    fn from(workers: usize) -> Self {
        ExecPolicy::new(workers, DEFAULT_GRAIN)
    }
}

/// Applies `f` to consecutive chunks of `items` and returns the per-chunk
/// outputs in chunk order.
pub fn map_chunks<T: Sync, R: Send>(
    exec: ExecPolicy,
    items: &[T],
    f: impl Fn(&[T]) -> R + Sync,
) -> Vec<R> {
    if items.is_empty() {
        return Vec::new();
    }
    imp::run(exec, items.chunks(exec.grain).count(), &|i| {
        f(&items[i * exec.grain..((i + 1) * exec.grain).min(items.len())])
    })
}

/// Applies `f` to consecutive index sub-ranges of `0..len`.
pub fn map_ranges<R: Send>(
    exec: ExecPolicy,
    len: usize,
    f: impl Fn(std::ops::Range<usize>) -> R + Sync,
) -> Vec<R> {
    if len == 0 {
        return Vec::new();
    }
    let chunks = len.div_ceil(exec.grain);
    imp::run(exec, chunks, &|i| {
        f(i * exec.grain..((i + 1) * exec.grain).min(len))
    })
}

#[cfg(feature = "parallel")]
mod imp {
    use super::ExecPolicy;
    use rayon::prelude::*;
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};

    fn pool(workers: usize) -> Arc<rayon::ThreadPool> {
        static POOLS: OnceLock<Mutex<HashMap<usize, Arc<rayon::ThreadPool>>>> = OnceLock::new();
        let pools = POOLS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut pools = pools.lock().unwrap();
        pools
            .entry(workers)
            .or_insert_with(|| {
                Arc::new(
                    rayon::ThreadPoolBuilder::new()
                        .num_threads(workers)
                        .thread_name(|i| format!("lexgreedy-{i}"))
                        .build()
                        .expect("failed to build worker pool"),
                )
            })
            .clone()
    }

    pub fn run<R: Send>(exec: ExecPolicy, chunks: usize, f: &(impl Fn(usize) -> R + Sync)) -> Vec<R> {
        pool(exec.workers).install(|| (0..chunks).into_par_iter().map(f).collect())
    }
}

#[cfg(not(feature = "parallel"))]
mod imp {
    use super::ExecPolicy;

    pub fn run<R: Send>(_exec: ExecPolicy, chunks: usize, f: &(impl Fn(usize) -> R + Sync)) -> Vec<R> {
        (0..chunks).map(f).collect()
    }
}
