//! Execution strategy for the batch loops (verification corpora, per-edge
//! checks, brute-force enumeration). Results never depend on the strategy:
//! every parallel map preserves item order.

/// How a batch loop runs. `Auto` uses the rayon pool when the `parallel`
/// feature is enabled and degrades to sequential otherwise; `Sequential`
/// forces the single-threaded path in any build.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    #[default]
    Auto,
    Sequential,
}

#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, U, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    match exec {
        Exec::Auto => items.into_par_iter().map(f).collect(),
        Exec::Sequential => items.into_iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, U, F>(_exec: Exec, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}

pub(crate) fn map_range<U, F>(exec: Exec, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    map_vec(exec, (0..n).collect(), f)
}
