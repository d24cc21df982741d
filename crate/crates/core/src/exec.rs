//! Sequential and data-parallel execution of the enumeration kernels.
//!
//! Every parallel kernel splits its index space into contiguous chunks,
//! computes one partial result per chunk and merges the partials by
//! addition, so the outcome never depends on scheduling. Without the
//! `parallel` feature, [`Execution::Parallel`] runs the same chunks in
//! order on the calling thread.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Splits `0..len` into at most `parts` contiguous ranges.
pub(crate) fn chunk_ranges(len: u64, parts: u64) -> Vec<Range<u64>> {
    let parts = parts.clamp(1, len.max(1));
    let step = len.div_ceil(parts);
    (0..parts)
        .map(|p| (p * step).min(len)..((p + 1) * step).min(len))
        .filter(|r| !r.is_empty())
        .collect()
}

fn default_parts() -> u64 {
    #[cfg(feature = "parallel")]
    {
        (rayon::current_num_threads() as u64 * 4).max(1)
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Maps each chunk of `0..len` through `work` and folds the results with `merge`.
pub(crate) fn map_reduce<T, W, M>(exec: Execution, len: u64, identity: T, work: W, merge: M) -> T
where
    T: Send + Clone,
    W: Fn(Range<u64>) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => merge(identity, work(0..len)),
        Execution::Parallel => {
            let chunks = chunk_ranges(len, default_parts());
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                let partials: Vec<T> = chunks.into_par_iter().map(&work).collect();
                partials.into_iter().fold(identity, &merge)
            }
            #[cfg(not(feature = "parallel"))]
            {
                chunks.into_iter().map(&work).fold(identity, &merge)
            }
        }
    }
}

/// `f(0), ..., f(len - 1)`, computed in parallel when requested.
pub(crate) fn map_indices<T, F>(exec: Execution, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..len).map(f).collect(),
        Execution::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..len).map(f).collect()
            }
        }
    }
}

/// Adds two histograms element-wise, growing the first when needed.
pub(crate) fn add_histograms(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_range_exactly() {
        for len in [0u64, 1, 7, 64, 1000] {
            for parts in [1u64, 3, 8, 5000] {
                let chunks = chunk_ranges(len, parts);
                let total: u64 = chunks.iter().map(|r| r.end - r.start).sum();
                assert_eq!(total, len);
                for w in chunks.windows(2) {
                    assert_eq!(w[0].end, w[1].start);
                }
            }
        }
    }

    #[test]
    fn map_reduce_is_schedule_independent() {
        let work = |r: Range<u64>| r.map(|i| i * i).sum::<u64>();
        let seq = map_reduce(Execution::Sequential, 10_000, 0, work, |a, b| a + b);
        let par = map_reduce(Execution::Parallel, 10_000, 0, work, |a, b| a + b);
        assert_eq!(seq, par);
    }
}
