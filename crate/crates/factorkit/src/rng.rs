//! SplitMix64, the pinned random generator for every seeded family.
//!
//! The generator is fully specified so corpora are reproducible across
//! implementations in any language:
//!
//! * state update: `state += 0x9E3779B97F4A7C15` (wrapping), then the
//!   output is `mix(state)` with the usual xor-shift-multiply finalizer;
//! * bounded draws use the multiply-shift reduction
//!   `(x * bound) >> 64`, never modulo;
//! * Bernoulli draws with probability `p` succeed when the raw draw is
//!   strictly below `round(p * 2^64)`.
//!
//! Seed 0 must produce `e220a8397b1dcdaf, 6e789e6aa1b965f4, ...`, the
//! published reference outputs for this generator.

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` via multiply-shift.
    pub fn next_index(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    /// Bernoulli draw with success probability `p` (clamped to `[0, 1]`).
    pub fn next_bernoulli(&mut self, p: f64) -> bool {
        (self.next_u64() as u128) < threshold(p)
    }
}

/// `round(p * 2^64)` clamped to `[0, 2^64]`, as a `u128`.
fn threshold(p: f64) -> u128 {
    if p <= 0.0 {
        0
    } else if p >= 1.0 {
        1u128 << 64
    } else {
        (p * 18_446_744_073_709_551_616.0).round() as u128
    }
}

/// The `index`-th output of the stream seeded with `seed`, in O(1).
///
/// Used to give every graph of a corpus its own sub-seed.
pub fn stream_value(seed: u64, index: u64) -> u64 {
    let mut rng = SplitMix64 {
        state: seed.wrapping_add(index.wrapping_mul(0x9E3779B97F4A7C15)),
    };
    rng.next_u64()
}
