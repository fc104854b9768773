//! Seeded pool of rational evaluation points for numeric-q computations.
//!
//! Candidates are rationals p/r with 2 ≤ |p|, r ≤ 5 (well inside the ≤ 100
//! window; small heights keep the bignum growth manageable at n = 8),
//! excluding 0 and ±1 — the only rational roots of unity. A computation that
//! hits an evaluation pole advances to the next candidate; at most
//! [`MAX_Q0_RETRIES`] are tried.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::scalar::is_degenerate_q0;

/// Retry budget when an evaluation pole is reported.
pub const MAX_Q0_RETRIES: usize = 5;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x51_f0;

#[derive(Clone, Debug)]
pub struct QPool {
    values: Vec<BigRational>,
}

impl QPool {
    pub fn seeded(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut values = Vec::with_capacity(MAX_Q0_RETRIES + 3);
        while values.len() < MAX_Q0_RETRIES + 3 {
            let num: i64 = rng.gen_range(2..=5);
            let den: i64 = rng.gen_range(2..=5);
            let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let v = BigRational::new((sign * num).into(), den.into());
            if is_degenerate_q0(&v) || values.contains(&v) {
                continue;
            }
            values.push(v);
        }
        QPool { values }
    }

    pub fn candidates(&self) -> impl Iterator<Item = &BigRational> {
        self.values.iter().take(MAX_Q0_RETRIES)
    }

    pub fn first(&self) -> &BigRational {
        &self.values[0]
    }

    /// Distinct leading candidates, e.g. for multi-point agreement checks.
    pub fn take(&self, k: usize) -> &[BigRational] {
        &self.values[..k.min(self.values.len())]
    }
}

impl Default for QPool {
    fn default() -> Self {
        QPool::seeded(DEFAULT_SEED)
    }
}
