//! Execution strategy for the data-parallel stages.
//!
//! Every parallel site maps independent work items into an index-ordered
//! `Vec`, so results are identical to the sequential path bit for bit.
//! Building without the `parallel` feature removes rayon entirely and
//! `Parallelism::Parallel` degrades to the sequential loop.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Parallelism {
    #[default]
    Sequential,
    Parallel,
}

impl Parallelism {
    /// `jobs = 1` is sequential; anything else requests the rayon pool
    /// (0 = let rayon pick the thread count).
    pub fn from_jobs(jobs: usize) -> Parallelism {
        if jobs == 1 {
            Parallelism::Sequential
        } else {
            Parallelism::Parallel
        }
    }
}

/// Configure the global rayon pool; call once, before any parallel work.
/// `jobs = 0` keeps rayon's default. No-op without the `parallel` feature.
pub fn configure_thread_pool(jobs: usize) {
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        // Ignore the error if a pool already exists (tests, repeated calls).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
}

/// Map `0..n` through `f`, preserving index order in the output.
pub fn map_indexed<T, F>(par: Parallelism, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if par == Parallelism::Parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = par;
    (0..n).map(f).collect()
}
