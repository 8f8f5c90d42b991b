//! Sequential and data-parallel execution of the sweep loops.
//!
//! With the `parallel` feature off, [`Execution::Parallel`] runs sequentially.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
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

/// Chunk size for range sweeps.
#[cfg(feature = "parallel")]
const CHUNK: u64 = 1 << 14;

impl Execution {
    /// `f` applied to every item, results in input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// All `n` in `[lo, hi)` with `pred(n)`, ascending.
    pub fn filter_range<F>(self, lo: u64, hi: u64, pred: F) -> Vec<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                let starts: Vec<u64> = (lo..hi).step_by(CHUNK as usize).collect();
                let parts: Vec<Vec<u64>> = starts
                    .par_iter()
                    .map(|&s| (s..(s + CHUNK).min(hi)).filter(|&n| pred(n)).collect())
                    .collect();
                parts.concat()
            }
            _ => (lo..hi).filter(|&n| pred(n)).collect(),
        }
    }

    /// Number of `n` in `[lo, hi)` with `pred(n)`.
    pub fn count_range<F>(self, lo: u64, hi: u64, pred: F) -> u64
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                let starts: Vec<u64> = (lo..hi).step_by(CHUNK as usize).collect();
                starts
                    .par_iter()
                    .map(|&s| (s..(s + CHUNK).min(hi)).filter(|&n| pred(n)).count() as u64)
                    .sum()
            }
            _ => (lo..hi).filter(|&n| pred(n)).count() as u64,
        }
    }
}
