//! Execution strategy for the data-parallel loops.
//!
//! Every batch loop in the crate (partition scans, survey sweeps, exhaustive
//! checks) goes through [`Exec`]. With the `parallel` feature the
//! [`Exec::Parallel`] variant runs on the rayon pool; without it both variants
//! run sequentially. Results are always returned in input order, so output
//! never depends on the variant or the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// True when this variant will actually fan out over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// The strategy to use for loops nested inside a loop run with `self`.
    pub fn inner(self) -> Exec {
        if self.is_parallel() {
            Exec::Sequential
        } else {
            self
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// First item (in input order) satisfying `pred`.
    pub fn find_first<T, F>(self, items: &[T], pred: F) -> Option<&T>
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().find_first(|t| pred(t));
        }
        items.iter().find(|t| pred(t))
    }

    pub fn all<T, F>(self, items: &[T], pred: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().all(pred);
        }
        items.iter().all(pred)
    }
}
