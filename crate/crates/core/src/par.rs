//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers fan out over rayon's
//! global pool. Without it, or after [`set_sequential`], they run on the
//! calling thread. Every helper returns the same value in both modes:
//! reductions pick the lowest index on ties.

use std::ops::Range;
use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Forces every helper in this module onto the calling thread.
pub fn set_sequential(on: bool) {
    FORCE_SEQUENTIAL.store(on, Ordering::SeqCst);
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::SeqCst)
}

/// Sizes the global pool. Only the first successful call has an effect.
pub fn configure_threads(jobs: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
    }
}

/// `f(i)` for every `i` in `range`, in order.
pub fn map_range<T, F>(range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    range.map(f).collect()
}

/// Minimum of `f(i)` over the range, ignoring `None`s; ties go to the lowest `i`.
pub fn min_by_key_range<T, K, F>(range: Range<usize>, f: F) -> Option<(usize, T)>
where
    T: Send,
    K: Ord,
    F: Fn(usize) -> Option<(K, T)> + Sync + Send,
    K: Send,
{
    let pick = |a: Option<(usize, K, T)>, b: Option<(usize, K, T)>| match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if (&b.1, b.0) < (&a.1, a.0) {
                Some(b)
            } else {
                Some(a)
            }
        }
    };
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return range
            .into_par_iter()
            .map(|i| f(i).map(|(k, t)| (i, k, t)))
            .reduce(|| None, pick)
            .map(|(i, _, t)| (i, t));
    }
    range.map(|i| f(i).map(|(k, t)| (i, k, t))).fold(None, pick).map(|(i, _, t)| (i, t))
}

/// First index (lowest) for which `f` yields `Some`.
pub fn find_first<T, F>(range: Range<usize>, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().find_map_first(|i| f(i).map(|t| (i, t)));
    }
    range.filter_map(|i| f(i).map(|t| (i, t))).next()
}

/// Sum of `f(i)` over the range.
pub fn sum_range<F>(range: Range<usize>, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).sum();
    }
    range.map(f).sum()
}

/// Calls `f(index, chunk)` on each `chunk`-word block of `data`.
pub(crate) fn for_each_chunk_mut<F>(data: &mut [u64], chunk: usize, f: F)
where
    F: Fn(usize, &mut [u64]) + Sync + Send,
{
    if chunk == 0 {
        return;
    }
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        data.par_chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
        return;
    }
    data.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_prefers_lowest_index_on_ties() {
        let got = min_by_key_range(0..100, |i| Some((i % 7, i)));
        assert_eq!(got, Some((0, 0)));
        let got = min_by_key_range(1..100, |i| if i % 10 == 3 { Some((1u32, i)) } else { None });
        assert_eq!(got, Some((3, 3)));
    }

    #[test]
    fn find_first_is_lowest() {
        assert_eq!(find_first(0..1000, |i| (i > 500 && i % 3 == 0).then_some(i)), Some((501, 501)));
        assert_eq!(find_first(0..10, |_| None::<()>), None);
    }
}
