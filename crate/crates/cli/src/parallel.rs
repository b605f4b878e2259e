//! Multi-threaded search over disjoint template prefixes.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::Instant;

use scfo_core::search::{
    merge_results, partition, search, search_with_prefix, SearchConfig, SearchError, SearchResult,
};
use scfo_core::BooleanFunction;

const PREFIX_DEPTH: usize = 2;

/// Runs [`search`] on `jobs` threads and sets `stats.elapsed`.
///
/// Protocols and status always match the single-threaded search; the
/// counters match too unless `limit` or the node budget cut the walk
/// short, since every prefix then stops on its own. The node budget
/// applies to each prefix separately.
pub fn parallel_search(
    f: &BooleanFunction,
    cfg: &SearchConfig,
    jobs: usize,
) -> Result<SearchResult, SearchError> {
    let start = Instant::now();
    let mut result = if jobs <= 1 {
        search(f, cfg)?
    } else {
        cfg.validate()?;
        let split = partition(f.arity(), cfg, PREFIX_DEPTH)?;
        let prefixes = split.prefixes;
        let next = AtomicUsize::new(0);
        let parts = Mutex::new(Vec::with_capacity(prefixes.len()));
        let first_error = Mutex::new(None);
        thread::scope(|s| {
            for _ in 0..jobs.min(prefixes.len().max(1)) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(prefix) = prefixes.get(i) else { break };
                    match search_with_prefix(f, cfg, prefix) {
                        Ok(r) => parts.lock().unwrap().push(r),
                        Err(e) => {
                            first_error.lock().unwrap().get_or_insert(e);
                            break;
                        }
                    }
                });
            }
        });
        if let Some(e) = first_error.into_inner().unwrap() {
            return Err(e);
        }
        let mut merged = merge_results(parts.into_inner().unwrap(), cfg.limit);
        merged.stats.absorb(&split.stats);
        merged
    };
    result.stats.elapsed = Some(start.elapsed());
    Ok(result)
}
