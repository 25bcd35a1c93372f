//! Seeded exact samples.

use dtl_field::Fe;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest numerator or denominator drawn.
pub const HEIGHT: i64 = 97;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Sub-stream for sample `k`, so samples can be checked in any order.
    pub fn for_sample(seed: u64, k: usize) -> Self {
        let mut s = ChaCha8Rng::seed_from_u64(seed);
        s.set_stream(k as u64 + 1);
        Sampler { rng: s }
    }

    /// Nonzero rational `+-a/b` with `1 <= a, b <= HEIGHT`.
    pub fn rat(&mut self) -> Fe {
        let a = self.rng.gen_range(1..=HEIGHT);
        let b = self.rng.gen_range(1..=HEIGHT);
        let s = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        Fe::frac(s * a, b)
    }

    /// Draw until `ok` accepts; `ok` guards against poles of the weights.
    pub fn rat_where(&mut self, ok: impl Fn(&Fe) -> bool) -> Fe {
        loop {
            let x = self.rat();
            if ok(&x) {
                return x;
            }
        }
    }
}
