//! The Jimm involution `J(x) = con(x) / con(1/x)` on `Q+`, its extension to
//! nonzero rationals, and its action on quadratic irrationals.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{is_positive, ContinuedFraction, QuadraticSurd, Rational};
use crate::conumerator::con_pair;
use crate::error::{Error, Result};
use crate::pgl2::alpha;

/// `J(x)` for `x > 0`.
pub fn jimm(x: &Rational) -> Result<Rational> {
    let (a, b) = con_pair(x)?;
    Ok(Rational::new(a.into(), b.into()))
}

/// `J` on nonzero rationals, with `J(x) = −1/J(−x)` for `x < 0`.
pub fn jimm_qstar(x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::domain("J is undefined at 0"));
    }
    if is_positive(x) {
        jimm(x)
    } else {
        Ok(-jimm(&-x)?.recip())
    }
}

/// Appends digits while resolving the `1_0` and `1_{-1}` conventions.
#[derive(Default)]
struct WordBuilder {
    digits: Vec<u64>,
    merge: bool,
}

impl WordBuilder {
    fn push(&mut self, d: u64) {
        if std::mem::take(&mut self.merge) {
            let last = self.digits.pop().expect("a merge follows a digit");
            self.digits.push(last + d - 1);
        } else {
            self.digits.push(d);
        }
    }

    /// `1_n`: `n` ones, nothing for `n = 0`, and for `n = −1` the previous
    /// and next digits `a, b` fuse into `a + b − 1`.
    fn ones(&mut self, n: i128) {
        match n {
            -1 => self.merge = true,
            _ => (0..n).for_each(|_| self.push(1)),
        }
    }
}

/// The continued fraction of `J(x)` obtained by rewriting the digits of `x`.
///
/// For `x = [n0, ..., nk]` with `x > 1` and `k >= 1` the image is
/// `[1_{n0−1}, 2, 1_{n1−2}, 2, ..., 2, 1_{nk−1}]`; single digits map as
/// `[n] ↦ [1_{n−2}, 2]` and `[1] ↦ [1]`, and `x < 1` uses `J(x) = 1/J(1/x)`.
/// The result is not canonicalized.
pub fn jimm_word(w: &ContinuedFraction) -> ContinuedFraction {
    let digits = w.digits();
    if digits[0] == 0 {
        let tail = ContinuedFraction::new(digits[1..].to_vec()).expect("x < 1 has a tail");
        let mut out = vec![0];
        out.extend_from_slice(jimm_word(&tail).digits());
        return ContinuedFraction::new(out).expect("image of a positive value");
    }
    let mut b = WordBuilder::default();
    match digits {
        [1] => b.push(1),
        [n] => {
            b.ones(*n as i128 - 2);
            b.push(2);
        }
        [first, middle @ .., last] => {
            b.ones(*first as i128 - 1);
            for &n in middle {
                b.push(2);
                b.ones(n as i128 - 2);
            }
            b.push(2);
            b.ones(*last as i128 - 1);
        }
        [] => unreachable!("continued fractions are nonempty"),
    }
    ContinuedFraction::new(b.digits).expect("rewrite keeps digits positive")
}

/// The value of `J` at a quadratic irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JimmValue {
    Rational(Rational),
    Surd(QuadraticSurd),
    Infinity,
}

impl JimmValue {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            JimmValue::Rational(r) => serde_json::Value::String(r.to_string()),
            JimmValue::Surd(s) => s.to_json(),
            JimmValue::Infinity => serde_json::Value::String("inf".into()),
        }
    }

    pub fn as_surd(&self) -> Option<&QuadraticSurd> {
        match self {
            JimmValue::Surd(s) => Some(s),
            _ => None,
        }
    }

    /// `−1/v`, with `0` and infinity exchanged.
    fn neg_recip(self) -> JimmValue {
        match self {
            JimmValue::Rational(r) if r.is_zero() => JimmValue::Infinity,
            JimmValue::Rational(r) => JimmValue::Rational(-r.recip()),
            JimmValue::Surd(s) => JimmValue::Surd(s.recip().neg()),
            JimmValue::Infinity => JimmValue::Rational(Rational::zero()),
        }
    }

    /// `1/v`, with `0` and infinity exchanged.
    fn recip(self) -> JimmValue {
        match self {
            JimmValue::Rational(r) if r.is_zero() => JimmValue::Infinity,
            JimmValue::Rational(r) => JimmValue::Rational(r.recip()),
            JimmValue::Surd(s) => JimmValue::Surd(s.recip()),
            JimmValue::Infinity => JimmValue::Rational(Rational::zero()),
        }
    }
}

impl fmt::Display for JimmValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JimmValue::Rational(r) => write!(f, "{r}"),
            JimmValue::Surd(s) => write!(f, "{s}"),
            JimmValue::Infinity => f.write_str("inf"),
        }
    }
}

const MAX_PERIODS: usize = 64;

/// `J(x)` for a quadratic irrational `x`.
///
/// Noble numbers go to rationals (the golden ratio to infinity). Otherwise
/// `x` is the attracting fixed point of `M = P·W·P⁻¹` built from its
/// expansion, `J(x)` is a fixed point of `α(M)`, and the right one is picked
/// by matching its leading digits against the rewritten expansion of `x`.
/// Negative inputs use `J(x) = −1/J(−x)`.
pub fn jimm_surd(x: &QuadraticSurd) -> Result<JimmValue> {
    if !x.is_positive() {
        return Ok(jimm_surd(&x.neg())?.neg_recip());
    }
    if x.floor().is_zero() {
        return Ok(jimm_surd(&x.recip())?.recip());
    }
    let w = x.cf_expand()?;
    if w.is_noble() {
        return Ok(noble_image(w.preperiod()));
    }
    let (r1, r2) = alpha(&w.fixing_matrix()).fixed_points()?;
    let candidates: Vec<QuadraticSurd> = [r1, r2].into_iter().filter(|r| r.is_positive()).collect();
    if let [only] = candidates.as_slice() {
        return Ok(JimmValue::Surd(only.clone()));
    }
    for periods in 3..=MAX_PERIODS {
        let approx = ContinuedFraction::new(w.unrolled(periods)).expect("expansion of x > 1");
        let mut expected = jimm_word(&approx).into_digits();
        expected.pop();
        let matching: Vec<&QuadraticSurd> = candidates
            .iter()
            .filter(|r| r.cf_prefix(expected.len()).is_ok_and(|p| p == expected))
            .collect();
        if let [only] = matching.as_slice() {
            return Ok(JimmValue::Surd((*only).clone()));
        }
    }
    Err(Error::Degenerate(format!("could not separate the images of {x}")))
}

/// `J` of `[n0, ..., nk, 1, 1, ...]` with `nk >= 2`, or of the golden ratio
/// when the preperiod is empty.
///
/// Writing the value as `[n0, ..., nk − 1, φ]` and using `J(φ) = ∞`, the
/// image is the rational `J([n0, ..., nk − 1])`.
fn noble_image(pre: &[u64]) -> JimmValue {
    let Some((&last, head)) = pre.split_last() else {
        return JimmValue::Infinity;
    };
    let mut digits = head.to_vec();
    digits.push(last - 1);
    let head = ContinuedFraction::new(digits).expect("noble preperiods end in a digit >= 2");
    JimmValue::Rational(jimm(&head.to_rational()).expect("positive head"))
}

/// `{J(p/q) : 1 <= q < p, gcd(p, q) = 1}`, the rationals with conumerator `p`
/// (just `1` for `p = 1`).
pub fn fiber(p: u64) -> Result<Vec<Rational>> {
    if p == 0 {
        return Err(Error::domain("fiber needs p >= 1"));
    }
    if p == 1 {
        return Ok(vec![Rational::one()]);
    }
    (1..p)
        .filter(|q| q.gcd(&p) == 1)
        .map(|q| jimm(&Rational::new(p.into(), q.into())))
        .collect()
}

/// Euler's totient, for checking fiber sizes.
pub fn totient(n: u64) -> u64 {
    let mut primes = crate::factorize::factor(n.max(1)).expect("n >= 1");
    primes.dedup();
    primes.iter().fold(n, |acc, p| acc / p * (p - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, PeriodicCF};
    use crate::conumerator::{con, num};
    use proptest::prelude::*;

    fn cf(d: &[u64]) -> ContinuedFraction {
        ContinuedFraction::new(d.to_vec()).unwrap()
    }

    fn surd(p: i64, b: i64, d: i64, q: i64) -> QuadraticSurd {
        QuadraticSurd::new(p, b, d, q).unwrap()
    }

    fn pcf(pre: &[u64], per: &[u64]) -> QuadraticSurd {
        PeriodicCF::new(pre.to_vec(), per.to_vec()).unwrap().to_surd()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(jimm(&rat(1, 1)).unwrap(), rat(1, 1));
        assert_eq!(jimm(&rat(5, 3)).unwrap(), rat(4, 1));
        assert_eq!(jimm(&rat(3, 1)).unwrap(), rat(3, 2));
        assert_eq!(jimm(&rat(41, 19)).unwrap(), rat(112, 81));
        assert_eq!(jimm_qstar(&rat(-1, 1)).unwrap(), rat(-1, 1));
        assert_eq!(jimm_qstar(&rat(-3, 1)).unwrap(), rat(-2, 3));
        assert_eq!(jimm_qstar(&rat(5, 3)).unwrap(), rat(4, 1));
        assert!(jimm_qstar(&rat(0, 1)).is_err());
        assert!(jimm(&rat(-1, 2)).is_err());
    }

    #[test]
    fn word_examples() {
        assert_eq!(jimm_word(&cf(&[2, 6, 3])).to_rational(), rat(112, 81));
        assert_eq!(jimm_word(&cf(&[1, 1, 2])), cf(&[3, 1]));
        assert_eq!(jimm_word(&cf(&[2, 2])), cf(&[1, 2, 1]));
        assert_eq!(jimm_word(&cf(&[1])), cf(&[1]));
        assert_eq!(jimm_word(&cf(&[5])), cf(&[1, 1, 1, 2]));
        assert_eq!(jimm_word(&cf(&[0, 2])), cf(&[0, 2]));
    }

    #[test]
    fn surd_examples() {
        assert_eq!(jimm_surd(&surd(1, 1, 2, 1)).unwrap(), JimmValue::Surd(surd(0, 1, 2, 1)));
        assert_eq!(jimm_surd(&surd(9, 1, 221, 10)).unwrap(), JimmValue::Surd(surd(-1, 1, 6, 1)));
        assert_eq!(jimm_surd(&surd(1, 1, 5, 2)).unwrap(), JimmValue::Infinity);
        assert_eq!(
            jimm_surd(&pcf(&[], &[2, 2, 1, 1, 1, 1])).unwrap(),
            JimmValue::Surd(pcf(&[1], &[2, 6]))
        );
        assert!(jimm_surd(&surd(-1, 1, 5, 2)).unwrap() == JimmValue::Rational(rat(0, 1)));
    }

    #[test]
    fn noble_numbers_go_to_rationals() {
        // 1 + φ = [2, 1, 1, ...] and J(1 + φ) = 1 + 1/J(φ) = 1.
        assert_eq!(jimm_surd(&pcf(&[2], &[1])).unwrap(), JimmValue::Rational(rat(1, 1)));
        // [3, 1, 1, ...] = 2 + φ and J(2 + φ) = 1 + 1/J(1 + φ) = 2.
        assert_eq!(jimm_surd(&pcf(&[3], &[1])).unwrap(), JimmValue::Rational(rat(2, 1)));
        assert_eq!(jimm_surd(&pcf(&[2, 5], &[1])).unwrap(), JimmValue::Rational(jimm(&cf(&[2, 4]).to_rational()).unwrap()));
    }

    #[test]
    fn purely_periodic_single_digit() {
        for n in 2..=6u64 {
            let pre = vec![1; n as usize - 1];
            let mut period = vec![2];
            period.extend(std::iter::repeat(1).take(n as usize - 2));
            let expected = PeriodicCF::new(pre, period).unwrap().to_surd();
            assert_eq!(jimm_surd(&pcf(&[], &[n])).unwrap(), JimmValue::Surd(expected), "n = {n}");
        }
    }

    #[test]
    fn fibers() {
        assert_eq!(fiber(1).unwrap(), vec![rat(1, 1)]);
        for p in [3, 5, 12, 41] {
            let f = fiber(p).unwrap();
            assert_eq!(f.len() as u64, totient(p));
            assert!(f.iter().all(|e| con(e).unwrap() == p.into()));
        }
        assert!(fiber(0).is_err());
    }

    proptest! {
        #[test]
        fn involution_and_symmetries(p in 1i64..=10_000, q in 1i64..=10_000) {
            let x = rat(p, q);
            let j = jimm(&x).unwrap();
            prop_assert_eq!(jimm(&j).unwrap(), x.clone());
            prop_assert_eq!(jimm(&x.recip()).unwrap(), j.recip());
            prop_assert_eq!(jimm(&(&x + Rational::one())).unwrap(), Rational::one() + j.recip());
            prop_assert_eq!(con(&j).unwrap(), num(&x).unwrap());
            prop_assert_eq!(jimm_qstar(&jimm_qstar(&-&x).unwrap()).unwrap(), -x.clone());
        }

        #[test]
        fn word_matches_value(p in 1i64..=10_000, q in 1i64..=10_000) {
            let x = rat(p, q);
            let w = ContinuedFraction::from_rational(&x).unwrap();
            prop_assert_eq!(jimm_word(&w).to_rational(), jimm(&x).unwrap());
        }

        #[test]
        fn reflection_on_unit_interval(p in 1i64..=10_000, q in 1i64..=10_000) {
            prop_assume!(p < q);
            let x = rat(p, q);
            let one = Rational::one();
            prop_assert_eq!(jimm(&(&one - &x)).unwrap(), &one - jimm(&x).unwrap());
        }
    }
}
