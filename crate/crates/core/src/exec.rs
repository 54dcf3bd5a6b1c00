//! Sequential and data-parallel execution of the search loops.
//!
//! Every parallel path returns exactly what the sequential path returns:
//! searches use first-match semantics in iteration order, maps preserve order.
//! Without the `parallel` feature, [`Strategy::Parallel`] runs sequentially.

/// How the inner loops of a search are executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// First `Some` produced by `f`, in slice order.
    pub(crate) fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(usize, &T) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                items
                    .par_iter()
                    .enumerate()
                    .find_map_first(|(i, t)| f(i, t))
            }
            _ => items.iter().enumerate().find_map(|(i, t)| f(i, t)),
        }
    }

    /// Order-preserving map.
    pub(crate) fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// True if `f` holds for any item.
    pub(crate) fn any<T, F>(self, items: &[T], f: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                items.par_iter().any(f)
            }
            _ => items.iter().any(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_match_is_in_order_for_both_strategies() {
        let items: Vec<u32> = (0..10_000).collect();
        for s in [Strategy::Sequential, Strategy::Parallel] {
            let hit = s.find_map_first(&items, |i, &x| (x % 977 == 976).then_some(i));
            assert_eq!(hit, Some(976));
            let squares = s.map(&items[..5], |x| x * x);
            assert_eq!(squares, vec![0, 1, 4, 9, 16]);
            assert!(s.any(&items, |&x| x == 9_999));
        }
    }
}
