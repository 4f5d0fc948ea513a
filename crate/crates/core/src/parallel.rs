//! Explicit worker pools for determinism audits.

use crate::error::{Error, Result};

/// Runs `f` on a dedicated rayon pool of `threads` workers. All parallel
/// drivers in this crate produce identical results for every pool size.
pub fn with_threads<T, F>(threads: usize, f: F) -> Result<T>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    if threads == 0 {
        return Err(Error::InvalidParameter("thread count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start {threads} worker threads: {e}")))?;
    Ok(pool.install(f))
}
