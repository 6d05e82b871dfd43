//! Partitioning of candidate ranges over a rayon pool. Chunk boundaries do
//! not depend on the worker count and results come back in chunk order, so
//! any pool size produces the same merged output.

use std::ops::Range;

use hyperzeta_core::ensemble::{FamilyScanner, TraceSums};
use rayon::prelude::*;

use crate::AppError;

/// Candidates per work item.
pub const CHUNK: u64 = 1024;

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs `f` on consecutive chunks of `0..total` on `workers` threads and
/// returns the results in chunk order.
pub fn map_chunks<T, F>(total: u64, workers: usize, f: F) -> Result<Vec<T>, AppError>
where
    T: Send,
    F: Fn(Range<u64>) -> hyperzeta_core::Result<T> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| AppError::Output(e.to_string()))?;
    let chunks = total.div_ceil(CHUNK);
    let out = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| f(c * CHUNK..((c + 1) * CHUNK).min(total)))
            .collect::<hyperzeta_core::Result<Vec<T>>>()
    })?;
    Ok(out)
}

/// Exact trace sums over the whole family.
pub fn scan_family(scanner: &FamilyScanner<'_>, workers: usize) -> Result<TraceSums, AppError> {
    let parts = map_chunks(scanner.spec().candidate_count(), workers, |r| scanner.scan(r))?;
    Ok(parts.iter().fold(TraceSums::empty(scanner.n_max()), |acc, p| acc.merge(p)))
}
