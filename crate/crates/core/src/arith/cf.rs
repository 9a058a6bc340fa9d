use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::rational::{is_positive, Rational};
use crate::error::{Error, Result};

/// A finite simple continued fraction `[n0, n1, ..., nk]`.
///
/// `n0 >= 0` and `ni >= 1` for `i >= 1`; the value is always positive. Both
/// representations of a rational are accepted: the canonical one (last digit
/// `>= 2` unless `k = 0`) and the alternate one ending in `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    digits: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(digits: Vec<u64>) -> Result<Self> {
        match digits.as_slice() {
            [] => Err(Error::domain("empty continued fraction")),
            [0] => Err(Error::domain("continued fraction [0] has value 0")),
            [_, rest @ ..] if rest.contains(&0) => Err(Error::domain(
                "partial quotients after the first must be positive",
            )),
            _ => Ok(ContinuedFraction { digits }),
        }
    }

    /// Euclidean expansion of a positive rational, in canonical form.
    pub fn from_rational(x: &Rational) -> Result<Self> {
        if !is_positive(x) {
            return Err(Error::domain(format!(
                "continued fraction expansion needs x > 0, got {x}"
            )));
        }
        let mut n = x.numer().clone();
        let mut d = x.denom().clone();
        let mut digits = Vec::new();
        while !d.is_zero() {
            let (q, r) = n.div_rem(&d);
            let q = q
                .to_u64()
                .ok_or_else(|| Error::domain("partial quotient exceeds 64 bits"))?;
            digits.push(q);
            n = d;
            d = r;
        }
        Ok(ContinuedFraction { digits })
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<u64> {
        self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Exact value, folding from the right.
    pub fn to_rational(&self) -> Rational {
        let (h, k) = convergent(&self.digits);
        Rational::new(h, k)
    }

    pub fn is_canonical(&self) -> bool {
        self.digits.len() == 1 || *self.digits.last().unwrap() >= 2
    }

    /// The canonical representation: `[..., n, 1]` becomes `[..., n + 1]`.
    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            return self.clone();
        }
        let mut digits = self.digits.clone();
        digits.pop();
        *digits.last_mut().unwrap() += 1;
        ContinuedFraction { digits }
    }

    /// The other representation of the same value, if one exists. The value 1
    /// has `[1]` and `[0, 1]`.
    pub fn alternate(&self) -> Self {
        if self.is_canonical() {
            let mut digits = self.digits.clone();
            let last = digits.last_mut().unwrap();
            *last -= 1;
            digits.push(1);
            ContinuedFraction { digits }
        } else {
            self.canonical()
        }
    }

    /// `n0 + n1 + ... + nk`.
    pub fn digit_sum(&self) -> u128 {
        self.digits.iter().map(|&d| d as u128).sum()
    }
}

/// Numerator and denominator of `[digits]` evaluated exactly.
fn convergent(digits: &[u64]) -> (BigInt, BigInt) {
    let (mut h, mut h_prev) = (BigInt::one(), BigInt::zero());
    let (mut k, mut k_prev) = (BigInt::zero(), BigInt::one());
    for &a in digits {
        let a = BigInt::from(a);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    (h, k)
}

pub(crate) fn format_digits(f: &mut fmt::Formatter<'_>, digits: &[u64]) -> fmt::Result {
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

pub(crate) fn parse_digit_list(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(format!("invalid partial quotient {t:?}")))
        })
        .collect()
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        format_digits(f, &self.digits)?;
        f.write_str("]")
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::parse(format!("expected [n0,...,nk], got {s:?}")))?;
        if inner.contains('(') {
            return Err(Error::parse("periodic part in a finite continued fraction"));
        }
        ContinuedFraction::new(parse_digit_list(inner)?).map_err(|e| match e {
            Error::Domain(m) => Error::Parse(m),
            other => other,
        })
    }
}
