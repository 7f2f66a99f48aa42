use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::batch::StateBatch;

/// Deterministic standard-normal stream with an explicit draw-order contract.
///
/// Batched draws fill row-major: all coordinates of batch row 0, then row 1,
/// and so on. The underlying generator is ChaCha8 keyed by the 64-bit seed;
/// normals come from the ziggurat method of `rand_distr::StandardNormal`.
/// Identical seeds and draw sequences produce identical streams across runs
/// and platforms.
///
/// A `NoiseSource` is single-owner: it is not shared across concurrent
/// consumers. Parallel work derives per-worker sources with [`NoiseSource::split`].
#[derive(Debug, Clone)]
pub struct NoiseSource {
    seed: u64,
    rng: ChaCha8Rng,
    normal_draws: u64,
}

impl NoiseSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
            normal_draws: 0,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of standard-normal draws consumed so far.
    pub fn normal_draws(&self) -> u64 {
        self.normal_draws
    }

    pub fn next_normal(&mut self) -> f64 {
        self.normal_draws += 1;
        StandardNormal.sample(&mut self.rng)
    }

    /// Uniform draw in `[0, 1)`. Not counted in [`NoiseSource::normal_draws`].
    pub fn next_uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    pub fn normal_vec(&mut self, len: usize) -> Vec<f64> {
        (0..len).map(|_| self.next_normal()).collect()
    }

    /// `batch x dim` standard normals, filled row-major per the draw contract.
    pub fn normal_batch(&mut self, batch: usize, dim: usize) -> StateBatch {
        let flat = self.normal_vec(batch * dim);
        StateBatch::from_array_unchecked(
            Array2::from_shape_vec((batch, dim), flat).expect("row-major shape"),
        )
    }

    /// Deterministic per-worker sub-source: `(seed, worker index) -> sub-seed`
    /// through a SplitMix64 mix, so parallel consumers never share a stream.
    pub fn split(&self, worker: u64) -> NoiseSource {
        let mixed = splitmix64(self.seed ^ splitmix64(worker.wrapping_add(1)));
        NoiseSource::new(mixed)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}
