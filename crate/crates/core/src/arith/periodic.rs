use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::cf::{format_digits, parse_digit_list};
use super::mat2::Mat2;
use super::surd::QuadraticSurd;
use crate::error::{Error, Result};

/// An eventually periodic continued fraction `[a0, ..., aj, (b0, ..., bp)]`.
///
/// Stored in reduced form: the period is primitive (not a repetition of a
/// shorter word) and the preperiod is as short as possible, so equal values
/// have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicCF {
    preperiod: Vec<u64>,
    period: Vec<u64>,
}

impl PeriodicCF {
    pub fn new(mut preperiod: Vec<u64>, mut period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::domain("empty period"));
        }
        if period.contains(&0) {
            return Err(Error::domain("period digits must be positive"));
        }
        if preperiod.iter().skip(1).any(|&d| d == 0) {
            return Err(Error::domain(
                "partial quotients after the first must be positive",
            ));
        }
        if let Some(len) = primitive_length(&period) {
            period.truncate(len);
        }
        while preperiod.last().is_some_and(|d| d == period.last().unwrap()) {
            preperiod.pop();
            period.rotate_right(1);
        }
        Ok(PeriodicCF { preperiod, period })
    }

    pub fn preperiod(&self) -> &[u64] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    /// Ends in an infinite tail of 1s.
    pub fn is_noble(&self) -> bool {
        self.period == [1]
    }

    /// The first `n` partial quotients.
    pub fn prefix(&self, n: usize) -> Vec<u64> {
        self.preperiod
            .iter()
            .chain(self.period.iter().cycle())
            .take(n)
            .copied()
            .collect()
    }

    /// The preperiod followed by `repeats` copies of the period.
    pub fn unrolled(&self, repeats: usize) -> Vec<u64> {
        let mut digits = self.preperiod.clone();
        for _ in 0..repeats {
            digits.extend_from_slice(&self.period);
        }
        digits
    }

    /// A hyperbolic matrix whose attracting fixed point is this value:
    /// `P·W·P⁻¹` with `P` the preperiod word and `W` the period word.
    pub fn fixing_matrix(&self) -> Mat2 {
        let pre = Mat2::from_cf_digits(&self.preperiod);
        let per = Mat2::from_cf_digits(&self.period);
        pre.mul(&per).mul(&pre.inverse())
    }

    /// Exact value as a quadratic surd.
    pub fn to_surd(&self) -> QuadraticSurd {
        // The purely periodic tail y = [period, y] is the root > 1 of
        // k·y² + (k' − h)·y − h' = 0 for the period word [[h, h'], [k, k']].
        let w = Mat2::from_cf_digits(&self.period);
        let (h, h1, k, k1) = (w.p(), w.q(), w.r(), w.s());
        let lin = h - k1;
        let disc = &lin * &lin + BigInt::from(4) * k * h1;
        let tail = QuadraticSurd::new(lin, 1, disc, BigInt::from(2) * k)
            .expect("periodic continued fractions are irrational");
        let pre = Mat2::from_cf_digits(&self.preperiod);
        tail.mobius(pre.p(), pre.q(), pre.r(), pre.s())
            .expect("unimodular maps preserve irrationality")
    }
}

/// Length of the shortest word whose repetition is `period`, if shorter.
fn primitive_length(period: &[u64]) -> Option<usize> {
    let n = period.len();
    (1..n)
        .filter(|len| n % len == 0)
        .find(|&len| period.chunks(len).all(|c| c == &period[..len]))
}

impl fmt::Display for PeriodicCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        format_digits(f, &self.preperiod)?;
        if !self.preperiod.is_empty() {
            f.write_str(",")?;
        }
        f.write_str("(")?;
        format_digits(f, &self.period)?;
        f.write_str(")]")
    }
}

impl FromStr for PeriodicCF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .and_then(|t| t.trim_end().strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("expected [a,b,(c,d)], got {s:?}")))?;
        let (pre, per) = inner
            .split_once('(')
            .ok_or_else(|| Error::parse(format!("missing period in {s:?}")))?;
        let pre = pre.trim().trim_end_matches(',');
        PeriodicCF::new(parse_digit_list(pre)?, parse_digit_list(per)?).map_err(|e| match e {
            Error::Domain(m) => Error::Parse(m),
            other => other,
        })
    }
}
