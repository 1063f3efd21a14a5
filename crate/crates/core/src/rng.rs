//! Deterministic seeded stream of rational sample points.
//!
//! A small splitmix64 keeps the specialization strategy reproducible across
//! platforms without pulling in an RNG dependency; the same seed always
//! yields the same trial values, which the reports record.

use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Next sample value for q: a rational with |q| not in {0, 1}, suitable
    /// as a generic specialization point.
    pub fn next_q_value(&mut self) -> BigRational {
        loop {
            let a = 2 + (self.next_u64() % 23) as i64; // 2..=24
            let b = 1 + (self.next_u64() % 7) as i64; // 1..=7
            let r = BigRational::new(BigInt::from(a), BigInt::from(b));
            if r != BigRational::from_integer(BigInt::from(1)) {
                return r;
            }
        }
    }

    /// Next small rational, allowed to be any sign but nonzero.
    pub fn next_nonzero_rational(&mut self) -> BigRational {
        loop {
            let a = (self.next_u64() % 19) as i64 - 9; // −9..=9
            if a == 0 {
                continue;
            }
            let b = 1 + (self.next_u64() % 5) as i64; // 1..=5
            return BigRational::new(BigInt::from(a), BigInt::from(b));
        }
    }
}
