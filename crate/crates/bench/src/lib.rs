//! Shared fixtures for the criterion benches.

use flagsbs::sampling::{rng_from_seed, stratum_representative};
use flagsbs::{Ensemble, Stratum, TracelessMatrix};

/// One handcrafted representative per stratum, labelled by stratum number.
pub fn representatives() -> Vec<(String, TracelessMatrix)> {
    Stratum::ALL
        .iter()
        .map(|&s| (format!("stratum{}", s.number()), stratum_representative(s)))
        .collect()
}

/// A fixed batch of draws from `ensemble`.
pub fn batch(ensemble: Ensemble, count: usize, seed: u64) -> Vec<TracelessMatrix> {
    let mut rng = rng_from_seed(seed);
    (0..count).map(|_| ensemble.draw(&mut rng)).collect()
}
