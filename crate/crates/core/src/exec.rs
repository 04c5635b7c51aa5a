//! Execution helpers: data-parallel scans with a sequential fallback.
//!
//! Every exhaustive sweep in the crate funnels through [`scan_rows`]: it
//! splits the outermost quantifier across rayon when the `parallel`
//! feature is compiled in and the caller asks for it, and degrades to a
//! plain loop otherwise. Results are concatenated in row order either
//! way, so reports never depend on scheduling.

/// Map `f` over `0..n` and concatenate the produced rows in order.
pub(crate) fn scan_rows<T, F>(parallel: bool, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Vec<T> + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel && n > 1 {
        use rayon::prelude::*;
        let rows: Vec<Vec<T>> = (0..n).into_par_iter().map(&f).collect();
        return rows.into_iter().flatten().collect();
    }
    let _ = parallel;
    (0..n).flat_map(f).collect()
}
