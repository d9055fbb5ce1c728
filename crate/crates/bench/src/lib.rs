//! Workloads shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropic_core::generate::{random_trivalent_tree, TreeParams};
use tropic_core::TropicalCurve;

/// `count` seeded random trivalent trees in `R^dim` with `vertices` vertices.
pub fn trees(seed: u64, count: usize, dim: usize, vertices: usize) -> Vec<TropicalCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = TreeParams::new(dim, vertices);
    p.max_denominator = 3;
    (0..count).map(|_| random_trivalent_tree(&mut rng, &p)).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn trees_are_reproducible() {
        assert_eq!(super::trees(3, 4, 2, 5), super::trees(3, 4, 2, 5));
    }
}
