//! Parallel evaluation with results in a fixed order.

use rayon::prelude::*;
use sp4kl_core::kloosterman::{EnumerationConfig, Enumerator, KlError};
use sp4kl_core::{KloostermanSetElement, LatticeDesc, Modulus, WeylWord};

/// Minimum number of independent branches handed to the pool.
const MIN_BRANCHES: usize = 64;

pub fn thread_pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// Enumerate `X_Γ(c*w)` on the current pool. The branches are processed in
/// parallel and concatenated in their canonical order, so the output equals
/// the sequential enumeration.
pub fn enumerate(
    lattice: LatticeDesc,
    w: WeylWord,
    c: Modulus,
    cfg: &EnumerationConfig,
) -> Result<Vec<KloostermanSetElement>, KlError> {
    let e = Enumerator::new(lattice, w, c, cfg.clone());
    let branches = e.branches(MIN_BRANCHES)?;
    let parts: Vec<Vec<KloostermanSetElement>> = branches
        .par_iter()
        .map(|b| e.run_branch(b))
        .collect::<Result<_, _>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// Map over items in parallel, keeping input order.
pub fn ordered_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.par_iter().map(f).collect()
}
