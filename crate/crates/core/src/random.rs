//! Random elements for the sampled suites.

use rand::Rng;

use crate::elements::{Kind, PartialMap, Partition};

/// A random partition of `{1..n} ∪ {1'..n'}`: each point draws a block
/// label independently, so every partition has positive probability.
pub fn random_partition<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Partition {
    let labels: Vec<usize> = (0..2 * n).map(|_| rng.random_range(0..2 * n)).collect();
    Partition::from_labels(n, labels)
}

/// A uniformly random element of `kind` at degree `n` (`kind` must not be `P`).
pub fn random_map<R: Rng + ?Sized>(rng: &mut R, kind: Kind, n: usize) -> PartialMap {
    loop {
        let images: Vec<Option<usize>> = (0..n)
            .map(|_| match kind {
                Kind::T => Some(rng.random_range(0..n)),
                _ => {
                    let y = rng.random_range(0..=n);
                    (y < n).then_some(y)
                }
            })
            .collect();
        let map = PartialMap::new(images).expect("images in range");
        if kind != Kind::I || map.is_injective() {
            return map;
        }
    }
}
