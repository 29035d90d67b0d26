//! Shared workloads for the benchmarks in `benches/`.

use nakrf::{NakAlgebra, NakEngine};

/// Λ(n, ℓ) with its stable Hom table already filled, so a benchmark only
/// measures the search on top of it.
pub fn warm_engine(n: usize, loewy: usize) -> NakEngine {
    let engine = NakEngine::new(NakAlgebra::new(n, loewy).expect("valid parameters"));
    let m = engine.modules()[0];
    engine.stable_hom_dim(m, m);
    engine
}

/// The brute-force acceptance grid: n ≤ 6, 2 ≤ ℓ ≤ 4.
pub fn brute_grid() -> Vec<(usize, usize)> {
    (1..=6).flat_map(|n| (2..=4).map(move |l| (n, l))).collect()
}
