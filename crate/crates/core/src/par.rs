//! Data-parallel helpers. With the `parallel` feature (default) the maps
//! fan out over rayon; without it they run sequentially. Both paths
//! preserve input order, so results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Runs `f` under a worker cap. `None` means the global default. Without
/// the `parallel` feature the cap is irrelevant and `f` runs directly.
#[cfg(feature = "parallel")]
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("failed to build worker pool")
            .install(f),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_jobs<R>(jobs: Option<usize>, f: impl FnOnce() -> R) -> R {
    let _ = jobs;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_preserved() {
        let out = par_map((0..1000).collect::<Vec<_>>(), |k| k * k);
        assert!(out.iter().enumerate().all(|(k, &v)| v == k * k));
    }

    #[test]
    fn jobs_cap_gives_same_result() {
        let base = par_map((0..100).collect::<Vec<_>>(), |k| k + 1);
        let capped = with_jobs(Some(2), || par_map((0..100).collect::<Vec<_>>(), |k| k + 1));
        assert_eq!(base, capped);
    }
}
