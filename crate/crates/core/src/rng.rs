//! The single deterministic pseudo-random generator used by every seeded
//! operation in this workspace.
//!
//! A 64-bit linear congruential generator with the multiplier
//! `6364136223846793005` and increment `1442695040888963407`, advanced as
//! `state <- state * MULTIPLIER + INCREMENT (mod 2^64)`; each call returns
//! the full new state. Seeds are therefore portable across platforms and
//! implementations, which is what the reproducibility contracts of the
//! refinement and scan commands rely on.

pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;

/// Seeded 64-bit linear congruential generator.
#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(LCG_MULTIPLIER)
            .wrapping_add(LCG_INCREMENT);
        self.state
    }

    /// Uniform-enough draw in `0..bound` by plain modulo; the tiny modulo
    /// bias is irrelevant here, portability of the exact draw sequence is not.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        self.next_u64() % bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_is_reproducible() {
        let mut a = Lcg64::new(42);
        let mut b = Lcg64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn first_values_are_frozen() {
        // Guards the documented constants: changing them silently would break
        // every recorded seed.
        let mut rng = Lcg64::new(0);
        assert_eq!(rng.next_u64(), 1442695040888963407);
        let mut rng1 = Lcg64::new(1);
        assert_eq!(rng1.next_u64(), 6364136223846793005u64.wrapping_add(1442695040888963407));
    }
}
