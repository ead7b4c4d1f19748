//! The one pseudo-random source behind every generator.
//!
//! The stream is xoshiro256** seeded through SplitMix64 from a 64-bit seed.
//! Derived draws are fixed here so corpora are reproducible independently of
//! any sampling library:
//! - `unit()`: `(x >> 11) · 2^-53`, uniform on `[0, 1)`;
//! - `bernoulli(p)`: `unit() < p`;
//! - `below(m)`: `⌊x · m / 2^64⌋` (multiply-high).

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

#[derive(Clone, Debug)]
pub struct SeededRng(Xoshiro256StarStar);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    pub fn below(&mut self, m: u64) -> u64 {
        ((self.next_u64() as u128 * m as u128) >> 64) as u64
    }

    /// Fisher–Yates from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_reproducible() {
        let a: Vec<u64> = {
            let mut r = SeededRng::new(42);
            (0..8).map(|_| r.next_u64()).collect()
        };
        let mut r = SeededRng::new(42);
        assert!(a.iter().all(|&x| x == r.next_u64()));
        let mut other = SeededRng::new(43);
        assert_ne!(a[0], other.next_u64());
    }

    #[test]
    fn draws_stay_in_range() {
        let mut r = SeededRng::new(1);
        for _ in 0..10_000 {
            assert!(r.below(7) < 7);
            let u = r.unit();
            assert!((0.0..1.0).contains(&u));
        }
        assert!(!r.bernoulli(0.0));
        assert!(r.bernoulli(1.0));
    }
}
