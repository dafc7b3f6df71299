//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) the index-space helpers below
//! fan out over rayon's current pool; without it they run as plain loops.
//! Every helper is order-preserving, so results never depend on scheduling.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// First (lowest index) `Some` produced by `f` over `range`.
pub fn find_map_first<R, F>(strategy: Strategy, range: Range<usize>, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    match strategy {
        Strategy::Sequential => range.into_iter().find_map(f),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => range.into_par_iter().find_map_first(f),
    }
}

/// `f` applied to every index, results in index order.
pub fn map_range<R, F>(strategy: Strategy, range: Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match strategy {
        Strategy::Sequential => range.map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => range.into_par_iter().map(f).collect(),
    }
}

/// `f` applied to every item of a slice, results in slice order.
pub fn map_slice<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => items.par_iter().map(f).collect(),
    }
}
