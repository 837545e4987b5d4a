//! Data-parallel helpers for sweeps over group orders and element pairs.
//!
//! With the `parallel` feature (on by default) these run on the rayon global
//! pool; without it, or inside [`with_execution`] with
//! [`Execution::Sequential`], they are plain iterator loops. Results are
//! always returned in input order, so callers see identical output either way.

use std::cell::Cell;
use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Execution {
    /// `Parallel` when the crate was built with the `parallel` feature.
    pub const fn available() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

thread_local! {
    static MODE: Cell<Execution> = const { Cell::new(Execution::available()) };
}

/// Runs `f` with the given execution mode on the current thread.
/// Requesting `Parallel` without the `parallel` feature falls back to sequential.
pub fn with_execution<R>(mode: Execution, f: impl FnOnce() -> R) -> R {
    let effective = match mode {
        Execution::Parallel => Execution::available(),
        Execution::Sequential => Execution::Sequential,
    };
    let previous = MODE.with(|m| m.replace(effective));
    let out = f();
    MODE.with(|m| m.set(previous));
    out
}

pub fn current() -> Execution {
    MODE.with(Cell::get)
}

pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if current() == Execution::Parallel {
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

pub fn map_range<U, F>(range: Range<u64>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(u64) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if current() == Execution::Parallel {
        return range.into_par_iter().map(f).collect();
    }
    range.map(f).collect()
}

/// Folds `range` into per-worker accumulators and merges them with `reduce`.
pub fn fold_range<A, I, F, R>(range: Range<u64>, identity: I, fold: F, reduce: R) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if current() == Execution::Parallel {
        return range.into_par_iter().fold(&identity, &fold).reduce(&identity, &reduce);
    }
    let _ = &reduce;
    range.fold(identity(), fold)
}
