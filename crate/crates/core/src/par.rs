//! Sequential or data-parallel execution of independent work items.
//!
//! Both variants always exist so callers and benches can pick at runtime; without
//! the `parallel` feature, `Parallel` runs sequentially.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
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

impl Execution {
    /// Order-preserving map.
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

    /// Order-preserving map over `0..n`.
    pub fn map_range<R, F>(self, n: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
            _ => (0..n).map(f).collect(),
        }
    }

    /// The hit with the smallest index, independent of scheduling.
    pub fn find_first<R, F>(self, n: u64, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().find_map_first(f)
            }
            _ => (0..n).find_map(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        for ex in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(ex.map_range(5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(ex.map(&[1, 2, 3], |x| x + 1), vec![2, 3, 4]);
            assert_eq!(ex.find_first(1000, |i| (i % 7 == 6).then_some(i)), Some(6));
            assert_eq!(ex.find_first(10, |_| None::<u64>), None);
        }
    }
}
