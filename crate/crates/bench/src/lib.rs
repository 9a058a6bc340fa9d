//! Shared inputs for the benchmarks.

use conum_core::{ContinuedFraction, Rational};

/// `[d, d, ..., d]` with `len` digits.
pub fn constant_word(d: u64, len: usize) -> ContinuedFraction {
    ContinuedFraction::new(vec![d; len]).expect("positive digits")
}

/// `k/denominator` for `k = 1..=max_k`.
pub fn table_inputs(denominator: i64, max_k: i64) -> Vec<Rational> {
    (1..=max_k)
        .map(|k| Rational::new(k.into(), denominator.into()))
        .collect()
}
