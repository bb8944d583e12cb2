//! Shared helpers for unit tests: a fixed-seed deterministic RNG and a
//! random-complex generator.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;

/// Deterministic RNG (stable across platforms and runs for a given seed).
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random complex on at most `max_vertices` named `v0, v1, …`, with at
/// most `max_facets` generating faces (possibly empty).
pub fn random_complex(
    r: &mut ChaCha8Rng,
    max_vertices: usize,
    max_facets: usize,
) -> SimplicialComplex {
    let n = r.random_range(1..=max_vertices);
    let fcount = r.random_range(0..=max_facets);
    let mut facets = Vec::with_capacity(fcount);
    for _ in 0..fcount {
        let size = r.random_range(1..=n.min(5));
        facets.push((0..size).map(|_| format!("v{}", r.random_range(0..n))).collect());
    }
    SimplicialComplex::from_named_facets(facets).expect("generated names are valid")
}
