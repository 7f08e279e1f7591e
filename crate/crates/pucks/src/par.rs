//! Thin dispatch layer between rayon and plain iterators.
//!
//! With the `parallel` feature the helpers fan work out over the global
//! rayon pool; without it they degrade to sequential loops. Both paths
//! collect in input order, so results are identical either way.

#[cfg(feature = "parallel")]
pub(crate) fn indexed_map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn((usize, &T)) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().enumerate().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn indexed_map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn((usize, &T)) -> U,
{
    items.iter().enumerate().map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn try_map_collect<T, U, E, F>(items: Vec<T>, f: F) -> Result<Vec<U>, E>
where
    T: Send,
    U: Send,
    E: Send,
    F: Fn(T) -> Result<U, E> + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_map_collect<T, U, E, F>(items: Vec<T>, f: F) -> Result<Vec<U>, E>
where
    F: Fn(T) -> Result<U, E>,
{
    items.into_iter().map(f).collect()
}
