//! Parameterized relatives of the numerator and conumerator systems:
//! coefficient systems, weighted and mixed systems, the oscillator family
//! and the digit sum.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::arith::{is_positive, ContinuedFraction, Rational};
use crate::conumerator::{con, num};
use crate::error::{Error, Result};
use crate::jimm::jimm;

/// Constants `(a, b, c)` of the coefficient systems, with `α = a/c` and
/// `β = b/c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl CoeffParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::domain("coefficient c must be nonzero"));
        }
        Ok(CoeffParams { a, b, c })
    }

    pub fn integers(a: i64, b: i64, c: i64) -> Result<Self> {
        let r = |n: i64| Rational::from_integer(n.into());
        CoeffParams::new(r(a), r(b), r(c))
    }

    pub fn alpha(&self) -> Rational {
        &self.a / &self.c
    }

    pub fn beta(&self) -> Rational {
        &self.b / &self.c
    }
}

fn digits_of(x: &Rational) -> Result<Vec<u64>> {
    if !is_positive(x) {
        return Err(Error::domain(format!("expected a positive rational, got {x}")));
    }
    Ok(ContinuedFraction::from_rational(x)?.into_digits())
}

type Pair = (Rational, Rational);

/// `[[p, q], [r, s]]` over the rationals, acting on column pairs.
#[derive(Clone)]
struct RatMat([Rational; 4]);

impl RatMat {
    fn identity() -> Self {
        RatMat([Rational::one(), Rational::zero(), Rational::zero(), Rational::one()])
    }

    fn mul(&self, o: &RatMat) -> RatMat {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &o.0;
        RatMat([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    fn pow(&self, mut n: u64) -> RatMat {
        let (mut base, mut acc) = (self.clone(), RatMat::identity());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    fn apply(&self, (x, y): &Pair) -> Pair {
        let [a, b, c, d] = &self.0;
        (a * x + b * y, c * x + d * y)
    }
}

/// Runs `(f(t), f(1/t))` from `t = 1` along the digits of `x`: `step` is
/// the action of `t ↦ t + 1` and `t ↦ 1/t` swaps the pair. In projective
/// mode the same walk evaluates a Möbius recurrence on `(numerator,
/// denominator)`.
fn walk(digits: &[u64], step: &RatMat, start: Pair) -> Pair {
    let (last, rest) = digits.split_last().expect("nonempty expansion");
    let mut pair = step.pow(last - 1).apply(&start);
    for &n in rest.iter().rev() {
        let swapped = (pair.1, pair.0);
        pair = step.pow(n).apply(&swapped);
    }
    pair
}

fn unit_pair() -> Pair {
    (Rational::one(), Rational::one())
}

/// `(κ(x), κ(1/x))`.
fn kappa_pair(p: &CoeffParams, x: &Rational) -> Result<Pair> {
    let step = RatMat([p.a.clone(), p.b.clone(), Rational::zero(), p.c.clone()]);
    Ok(walk(&digits_of(x)?, &step, unit_pair()))
}

/// `(η(x), η(1/x))`.
fn eta_pair(p: &CoeffParams, x: &Rational) -> Result<Pair> {
    let step = RatMat([p.a.clone(), p.b.clone(), p.c.clone(), Rational::zero()]);
    Ok(walk(&digits_of(x)?, &step, unit_pair()))
}

/// The solution of `f(1+x) = a f(x) + b f(1/x)`, `f(x/(1+x)) = c f(x)` with
/// `f(1) = 1`.
pub fn kappa(p: &CoeffParams, x: &Rational) -> Result<Rational> {
    Ok(kappa_pair(p, x)?.0)
}

/// The solution of `f(1+x) = a f(x) + b f(1/x)`, `f(1/(1+x)) = c f(x)` with
/// `f(1) = 1`.
pub fn eta(p: &CoeffParams, x: &Rational) -> Result<Rational> {
    Ok(eta_pair(p, x)?.0)
}

fn ratio(num: Rational, den: Rational, what: &str) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::Degenerate(format!("{what} has a zero denominator")));
    }
    Ok(num / den)
}

/// `κ(x)/κ(1/x)`.
pub fn g_ratio(p: &CoeffParams, x: &Rational) -> Result<Rational> {
    let (k, k_inv) = kappa_pair(p, x)?;
    ratio(k, k_inv, "κ(x)/κ(1/x)")
}

/// `(1 − α^n)/(1 − α)`, or `n` when `α = 1`.
fn geometric(alpha: &Rational, n: u64) -> Rational {
    if alpha.is_one() {
        return Rational::from_integer(n.into());
    }
    let one = Rational::one();
    (&one - Pow::pow(alpha, n as u32)) / (&one - alpha)
}

/// `g(x)` by the nested formula `g(n + 1/t) = S(n)·β + α^n / g(t)` with
/// `S(n) = 1 + α + ... + α^(n−1)`.
pub fn g_ratio_closed(p: &CoeffParams, x: &Rational) -> Result<Rational> {
    let digits = digits_of(x)?;
    let (alpha, beta) = (p.alpha(), p.beta());
    let term = |n: u64| (geometric(&alpha, n) * &beta, Pow::pow(&alpha, n as u32));
    let (last, rest) = digits.split_last().unwrap();
    let (s, a) = term(last - 1);
    let mut val = s + a;
    for &n in rest.iter().rev() {
        let (s, a) = term(n);
        val = s + ratio(a, val, "the nested fraction for g")?;
    }
    Ok(val)
}

/// `η(x)/η(1/x)`.
pub fn h_ratio(p: &CoeffParams, x: &Rational) -> Result<Rational> {
    let (e, e_inv) = eta_pair(p, x)?;
    ratio(e, e_inv, "η(x)/η(1/x)")
}

/// `h(x)` from `h(1 + x) = α + β/h(x)`, `h(1/x) = 1/h(x)` and `h(1) = 1`,
/// evaluated as iterated Möbius maps on projective pairs.
pub fn h_ratio_recursive(p: &CoeffParams, x: &Rational) -> Result<Rational> {
    let step = RatMat([p.alpha(), p.beta(), Rational::one(), Rational::zero()]);
    let (n, d) = walk(&digits_of(x)?, &step, unit_pair());
    ratio(n, d, "the nested fraction for h")
}

fn weight(x: &Rational, s: i32) -> Result<Rational> {
    let n = Rational::from_integer(num(&x.recip())?.into());
    Ok(n.pow(-s))
}

/// `num(x)·num(1/x)^(−s)`, solving `f(1+x) = f(x) + x^s f(1/x)` and
/// `(1+x)^s f(x/(1+x)) = f(x)`.
pub fn weighted_num(s: i32, x: &Rational) -> Result<Rational> {
    Ok(Rational::from_integer(num(x)?.into()) * weight(x, s)?)
}

/// `con(x)·num(1/x)^(−s)`, solving `f(1+x) = f(x) + x^s f(1/x)` and
/// `(1+x)^s f(1/(1+x)) = f(x)`.
pub fn weighted_con(s: i32, x: &Rational) -> Result<Rational> {
    Ok(Rational::from_integer(con(x)?.into()) * weight(x, s)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// Built on `κ`; second equation through `x/(1+x)`.
    Num,
    /// Built on `η`; second equation through `1/(1+x)`.
    Con,
}

/// A named parameter set for the mixed systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// `(a, b, c, s) = (1, −1, 1, −2)` on the numerator side.
    NumDerivative,
    /// `(a, b, c, s) = (1, −1, −1, −2)` on the conumerator side.
    ConDerivative,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::NumDerivative => "num-derivative",
            Preset::ConDerivative => "con-derivative",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "num-derivative" => Ok(Preset::NumDerivative),
            "con-derivative" => Ok(Preset::ConDerivative),
            _ => Err(Error::parse(format!("unknown preset {name:?}"))),
        }
    }

    pub fn params(self) -> (CoeffParams, i32, Flavor) {
        match self {
            Preset::NumDerivative => (CoeffParams::integers(1, -1, 1).unwrap(), -2, Flavor::Num),
            Preset::ConDerivative => (CoeffParams::integers(1, -1, -1).unwrap(), -2, Flavor::Con),
        }
    }
}

/// `κ(x)·num(1/x)^(−s)` or `η(x)·num(1/x)^(−s)`.
///
/// These solve `f(1+x) = a f(x) + b x^s f(1/x)` together with
/// `(1+x)^s f(x/(1+x)) = c f(x)` (num flavor) or
/// `(1+x)^s f(1/(1+x)) = c f(x)` (con flavor).
pub fn mixed_solution(p: &CoeffParams, s: i32, flavor: Flavor, x: &Rational) -> Result<Rational> {
    let base = match flavor {
        Flavor::Num => kappa(p, x)?,
        Flavor::Con => eta(p, x)?,
    };
    Ok(base * weight(x, s)?)
}

/// `n0 − n1 + ... ± nk` on the canonical expansion.
pub fn osc(x: &Rational) -> Result<BigInt> {
    Ok(alternating_sum(&digits_of(x)?))
}

fn alternating_sum(digits: &[u64]) -> BigInt {
    digits
        .iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { BigInt::from(d) } else { -BigInt::from(d) })
        .sum()
}

/// `osc(J(x))`.
pub fn cosc(x: &Rational) -> Result<BigInt> {
    osc(&jimm(x)?)
}

/// `n0 + n1 + ... + nk`.
pub fn ell(x: &Rational) -> Result<BigInt> {
    Ok(digits_of(x)?.iter().map(|&d| BigInt::from(d)).sum())
}

/// Which map the second equation of an oscillator system goes through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OscMove {
    /// `1/(1+x)`.
    Reciprocal,
    /// `x/(1+x)`.
    Ratio,
}

/// Solves `f(x+1) = f(x) + 1`, `a (x+1)^s f(m(x)) = f(x) + 1`, `f(1) = 1`
/// where `m` is `1/(1+x)` or `x/(1+x)`. `a = −1, s = 0` with the reciprocal
/// move is the oscillator.
pub fn oscillator_system(a: &Rational, s: i32, mv: OscMove, x: &Rational) -> Result<Rational> {
    if a.is_zero() {
        return Err(Error::domain("constant a must be nonzero"));
    }
    if !is_positive(x) {
        return Err(Error::domain(format!("expected a positive rational, got {x}")));
    }
    // Reduce to 1, recording (shift n) and (pull back through m with weight).
    enum Step {
        Shift(BigInt),
        Pull(Rational),
    }
    let one = Rational::one();
    let mut steps = Vec::new();
    let mut y = x.clone();
    while y != one {
        if y > one {
            let n = y.to_integer();
            let n = if Rational::from_integer(n.clone()) == y { n - 1 } else { n };
            y -= Rational::from_integer(n.clone());
            steps.push(Step::Shift(n));
        } else {
            // y = m(t) with t > 0, so f(y) = (f(t) + 1) / (a (1+t)^s).
            let t = match mv {
                OscMove::Reciprocal => y.recip() - &one,
                OscMove::Ratio => &y / (&one - &y),
            };
            let w = a * (&t + &one).pow(s);
            steps.push(Step::Pull(w));
            y = t;
        }
    }
    let mut f = one.clone();
    for step in steps.into_iter().rev() {
        f = match step {
            Step::Shift(n) => f + Rational::from_integer(n),
            Step::Pull(w) => (f + &one) / w,
        };
    }
    Ok(f)
}
