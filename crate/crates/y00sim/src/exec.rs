//! Execution strategy for the data-parallel inner loops.
//!
//! With the default `parallel` feature the index maps below fan out over the
//! rayon global pool; without it they degrade to plain sequential loops.
//! Either way the output order is the index order, so callers that reduce
//! results sequentially get identical (bit-for-bit) answers under both
//! strategies and any thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, preserving index order in the output.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential reference for [`map_indexed`]; the benchmark suite compares
/// the two on the same workloads.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree_in_order() {
        let a = map_indexed(257, |i| i * i);
        let b = map_indexed_seq(257, |i| i * i);
        assert_eq!(a, b);
    }
}
