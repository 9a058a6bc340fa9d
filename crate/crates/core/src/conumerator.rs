//! The conumerator, the numerator and the codiscriminant on `Q+`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{is_positive, ContinuedFraction, Rational};
use crate::error::{Error, Result};

/// The Fibonacci number `F_n` (`F_0 = 0`, `F_1 = 1`), by fast doubling.
pub fn fib(n: u64) -> BigUint {
    fib_pair(n).0
}

/// `(F_n, F_{n+1})`.
fn fib_pair(n: u64) -> (BigUint, BigUint) {
    if n == 0 {
        return (BigUint::zero(), BigUint::one());
    }
    let (a, b) = fib_pair(n / 2);
    let c = &a * (&b + &b - &a);
    let d = &a * &a + &b * &b;
    if n % 2 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// `F_n` for any integer `n`, using `F_{-n} = (-1)^{n+1} F_n`.
pub fn fib_signed(n: i64) -> BigInt {
    let f = BigInt::from(fib(n.unsigned_abs()));
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

fn require_positive(x: &Rational) -> Result<()> {
    if is_positive(x) {
        Ok(())
    } else {
        Err(Error::domain(format!("expected a positive rational, got {x}")))
    }
}

/// Numerator of `x > 0` in lowest terms.
pub fn num(x: &Rational) -> Result<BigUint> {
    require_positive(x)?;
    Ok(x.numer().magnitude().clone())
}

/// The conumerator of `x > 0`.
pub fn con(x: &Rational) -> Result<BigUint> {
    Ok(con_pair(x)?.0)
}

/// `(con(x), con(1/x))` for `x > 0`.
pub fn con_pair(x: &Rational) -> Result<(BigUint, BigUint)> {
    require_positive(x)?;
    Ok(con_pair_cf(&ContinuedFraction::from_rational(x)?))
}

/// The conumerator of the value of a continued fraction.
pub fn con_cf(w: &ContinuedFraction) -> BigUint {
    con_pair_cf(w).0
}

/// `(con(t), con(1/t))` where `t` is the value of `w`.
///
/// Runs right to left over the digits. Adding `n` to `t` maps the pair
/// `(A, B)` to `(F_{n+1} A + F_n B, F_n A + F_{n-1} B)` and taking the
/// reciprocal swaps it. The tail `[nk]` starts from `con(1) = 1` shifted by
/// `nk - 1`.
pub fn con_pair_cf(w: &ContinuedFraction) -> (BigUint, BigUint) {
    let digits = w.digits();
    let (last, rest) = digits.split_last().expect("continued fractions are nonempty");
    let mut pair = shift(BigUint::one(), BigUint::one(), last - 1);
    for &n in rest.iter().rev() {
        let (a, b) = pair;
        pair = shift(b, a, n);
    }
    debug_assert!(w.digit_sum() > 4096 || check_against_word(w, &pair.0));
    pair
}

fn shift(a: BigUint, b: BigUint, n: u64) -> (BigUint, BigUint) {
    if n == 0 {
        return (a, b);
    }
    let (f0, f1) = fib_pair(n - 1);
    let f2 = &f0 + &f1;
    (&f2 * &a + &f1 * &b, &f1 * a + &f0 * b)
}

/// `con(x) = num(J(x))` with `J(x)` computed by word rewriting.
fn check_against_word(w: &ContinuedFraction, con: &BigUint) -> bool {
    let image = crate::jimm::jimm_word(w).to_rational();
    image.numer().magnitude() == con
}

/// `num(x)` recomputed as `con(con(x)/con(1/x))`.
pub fn num_via_con(x: &Rational) -> Result<BigUint> {
    let (a, b) = con_pair(x)?;
    con(&Rational::new(a.into(), b.into()))
}

/// The codiscriminant `con(x)² − con(x+1)·con(1/x)` for `x > 1`.
pub fn cds(x: &Rational) -> Result<BigInt> {
    if *x <= Rational::one() {
        return Err(Error::domain(format!("codiscriminant needs x > 1, got {x}")));
    }
    let (a, b) = con_pair(x)?;
    let next = &a + &b;
    let a = BigInt::from(a);
    Ok(&a * &a - BigInt::from(next * b))
}

/// The form `con(r)² − con(r)·con(1/r) − con(1/r)²` for `r` in `(0, 1]`.
///
/// `cds(n + r) = (−1)^n · codisc_form(r)`.
pub fn codisc_form(r: &Rational) -> Result<BigInt> {
    if !is_positive(r) || *r > Rational::one() {
        return Err(Error::domain(format!("expected r in (0, 1], got {r}")));
    }
    let (a, b) = con_pair(r)?;
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    Ok(&a * &a - &a * &b - &b * &b)
}
