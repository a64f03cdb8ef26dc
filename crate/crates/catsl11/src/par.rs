//! Data-parallel helpers. With the `parallel` feature the closures run on the
//! rayon pool; without it the same code runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over a slice, preserving order.
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Map over `0..n`, preserving order.
pub fn map_range<R: Send>(n: usize, f: impl Fn(usize) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// First `Some` produced by `f`, in index order.
pub fn find_first<R: Send>(n: usize, f: impl Fn(usize) -> Option<R> + Sync + Send) -> Option<R> {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find_map(f)
    }
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
