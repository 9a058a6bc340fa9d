use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::periodic::PeriodicCF;
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::factorize;

/// An exact real quadratic irrational `(p + b·√d) / q`.
///
/// Normal form: `d > 1` squarefree, `b != 0`, `q > 0` and
/// `gcd(p, b, q) = 1`. The sign of `b` distinguishes a number from its
/// Galois conjugate, so two surds are equal iff all four fields agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    b: BigInt,
    d: BigInt,
    q: BigInt,
}

impl QuadraticSurd {
    /// Brings `(p + b·√d) / q` to normal form, extracting the square part of `d`.
    pub fn new(
        p: impl Into<BigInt>,
        b: impl Into<BigInt>,
        d: impl Into<BigInt>,
        q: impl Into<BigInt>,
    ) -> Result<Self> {
        let (p, b, d, q) = (p.into(), b.into(), d.into(), q.into());
        if q.is_zero() {
            return Err(Error::domain("surd with zero denominator"));
        }
        if !d.is_positive() {
            return Err(Error::domain(format!("surd radicand must be positive, got {d}")));
        }
        if b.is_zero() {
            return Err(Error::domain("surd with zero irrational part is rational"));
        }
        let (square_root, core) = factorize::square_part(d.magnitude());
        if core.is_one() {
            return Err(Error::domain(format!(
                "radicand {d} is a perfect square; value is rational"
            )));
        }
        Ok(Self::reduce(p, b * BigInt::from(square_root), BigInt::from(core), q))
    }

    /// Normalizes sign and common factors; `d` must already be squarefree.
    fn reduce(mut p: BigInt, mut b: BigInt, d: BigInt, mut q: BigInt) -> Self {
        if q.is_negative() {
            p = -p;
            b = -b;
            q = -q;
        }
        let g = p.gcd(&b).gcd(&q);
        if !g.is_one() {
            p /= &g;
            b /= &g;
            q /= &g;
        }
        QuadraticSurd { p, b, d, q }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The Galois conjugate `(p − b·√d) / q`.
    pub fn conjugate(&self) -> Self {
        QuadraticSurd { b: -&self.b, ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd { p: -&self.p, b: -&self.b, ..self.clone() }
    }

    pub fn recip(&self) -> Self {
        self.mobius(&BigInt::zero(), &BigInt::one(), &BigInt::one(), &BigInt::zero())
            .expect("reciprocal of an irrational is irrational")
    }

    pub fn add_integer(&self, n: &BigInt) -> Self {
        Self::reduce(&self.p + n * &self.q, self.b.clone(), self.d.clone(), self.q.clone())
    }

    /// Sign of the value.
    pub fn signum(&self) -> Ordering {
        sign_of(&self.p, &self.b, &self.d)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        // (p + b√d)/q − n/m has the sign of (p·m − n·q) + b·m·√d.
        let rational_part = &self.p * r.denom() - r.numer() * &self.q;
        sign_of(&rational_part, &(&self.b * r.denom()), &self.d)
    }

    /// Exact comparison with another surd over the same radicand.
    pub fn cmp_same_field(&self, other: &Self) -> Option<Ordering> {
        if self.d != other.d {
            return None;
        }
        let rational_part = &self.p * &other.q - &other.p * &self.q;
        let irrational_part = &self.b * &other.q - &other.b * &self.q;
        Some(sign_of(&rational_part, &irrational_part, &self.d))
    }

    /// Integer part of the value.
    pub fn floor(&self) -> BigInt {
        floor_quadratic(&self.p, self.b.sign(), &(&self.b * &self.b * &self.d), &self.q)
    }

    /// `(a·x + b) / (c·x + d)` for an integer matrix with nonzero determinant.
    pub fn mobius(&self, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Result<Self> {
        let n1 = a * &self.p + b * &self.q;
        let n2 = a * &self.b;
        let m1 = c * &self.p + d * &self.q;
        let m2 = c * &self.b;
        let denom = &m1 * &m1 - &m2 * &m2 * &self.d;
        let rational = &n1 * &m1 - &n2 * &m2 * &self.d;
        let irrational = &n2 * &m1 - &n1 * &m2;
        if irrational.is_zero() {
            return Err(Error::domain("singular Möbius map sends the surd to a rational"));
        }
        Ok(Self::reduce(rational, irrational, self.d.clone(), denom))
    }

    /// Eventually periodic continued fraction of a positive surd, with
    /// minimal preperiod and period.
    pub fn cf_expand(&self) -> Result<PeriodicCF> {
        if !self.is_positive() {
            return Err(Error::domain(format!(
                "continued fraction expansion needs x > 0, got {self}"
            )));
        }
        let mut state = CompleteQuotient::new(self);
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
        let mut digits = Vec::new();
        loop {
            if let Some(&start) = seen.get(&(state.p.clone(), state.q.clone())) {
                let period = digits.split_off(start);
                return PeriodicCF::new(digits, period);
            }
            seen.insert((state.p.clone(), state.q.clone()), digits.len());
            digits.push(state.step()?);
        }
    }

    /// The first `n` partial quotients of a positive surd.
    pub fn cf_prefix(&self, n: usize) -> Result<Vec<u64>> {
        if !self.is_positive() {
            return Err(Error::domain("continued fraction expansion needs x > 0"));
        }
        let mut state = CompleteQuotient::new(self);
        (0..n).map(|_| state.step()).collect()
    }

    /// JSON object `{"p":..,"b":..,"d":..,"q":..}` with integer values.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("surd serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse(format!("invalid surd JSON: {e}")))
    }
}

/// Sign of `p + b·√d`, for `d > 0` not a perfect square.
fn sign_of(p: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    let ps = p.sign();
    let bs = b.sign();
    match (ps, bs) {
        (_, Sign::NoSign) => ps_ord(ps),
        (Sign::NoSign, _) => ps_ord(bs),
        _ if ps == bs => ps_ord(ps),
        _ => {
            // Opposite signs: compare p² with b²·d; equality is impossible.
            let lhs = p * p;
            let rhs = b * b * d;
            if lhs > rhs {
                ps_ord(ps)
            } else {
                ps_ord(bs)
            }
        }
    }
}

fn ps_ord(s: Sign) -> Ordering {
    match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

/// `floor((p + sign·√disc) / q)` for `disc` not a perfect square, `q != 0`.
fn floor_quadratic(p: &BigInt, sign: Sign, disc: &BigInt, q: &BigInt) -> BigInt {
    let root = disc.sqrt();
    let (p, sign, q) = if q.is_negative() {
        (-p, -sign, -q)
    } else {
        (p.clone(), sign, q.clone())
    };
    // floor(sign·√disc) for irrational √disc.
    let floor_s = if sign == Sign::Minus { -root - 1 } else { root };
    (p + floor_s).div_floor(&q)
}

/// Complete quotient `(p + √disc) / q` with `q | disc − p²`, the state of the
/// classical continued-fraction recurrence.
struct CompleteQuotient {
    p: BigInt,
    q: BigInt,
    disc: BigInt,
}

impl CompleteQuotient {
    fn new(x: &QuadraticSurd) -> Self {
        // (p + b√d)/q = (p·s + √(b²d)) / (q·s) with s = sign(b).
        let s = BigInt::from(if x.b.is_negative() { -1 } else { 1 });
        let mut p = &x.p * &s;
        let mut q = &x.q * &s;
        let mut disc = &x.b * &x.b * &x.d;
        if !(&disc - &p * &p).is_multiple_of(&q) {
            let qa = q.abs();
            p *= &qa;
            disc *= &q * &q;
            q *= &qa;
        }
        CompleteQuotient { p, q, disc }
    }

    fn step(&mut self) -> Result<u64> {
        let a = floor_quadratic(&self.p, Sign::Plus, &self.disc, &self.q);
        let p_next = &a * &self.q - &self.p;
        let q_next = (&self.disc - &p_next * &p_next) / &self.q;
        self.p = p_next;
        self.q = q_next;
        a.to_u64()
            .ok_or_else(|| Error::domain("partial quotient outside 0..2^64"))
    }
}

impl fmt::Display for QuadraticSurd {
    /// Plain text such as `(9+√221)/10`, `√6-1` or `(12√143-60)/59`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let radical = match self.b.abs() {
            m if m.is_one() => format!("√{}", self.d),
            m => format!("{m}√{}", self.d),
        };
        let numerator = match (self.p.sign(), self.b.sign()) {
            (Sign::NoSign, Sign::Minus) => format!("-{radical}"),
            (Sign::NoSign, _) => radical,
            (_, Sign::Minus) => format!("{}-{radical}", self.p),
            (Sign::Plus, _) => format!("{}+{radical}", self.p),
            (Sign::Minus, _) => format!("{radical}-{}", self.p.abs()),
        };
        if self.q.is_one() {
            f.write_str(&numerator)
        } else {
            write!(f, "({numerator})/{}", self.q)
        }
    }
}

impl FromStr for QuadraticSurd {
    type Err = Error;

    /// Parses the JSON object form.
    fn from_str(s: &str) -> Result<Self> {
        Self::from_json(s)
    }
}

#[derive(Serialize, Deserialize)]
struct SurdJson {
    p: serde_json::Number,
    b: serde_json::Number,
    d: serde_json::Number,
    q: serde_json::Number,
}

fn to_number(n: &BigInt) -> serde_json::Number {
    n.to_string().parse().expect("integers are valid JSON numbers")
}

fn from_number<E: serde::de::Error>(n: &serde_json::Number) -> Result<BigInt, E> {
    n.to_string()
        .parse()
        .map_err(|_| E::custom(format!("expected an integer, got {n}")))
}

impl Serialize for QuadraticSurd {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SurdJson {
            p: to_number(&self.p),
            b: to_number(&self.b),
            d: to_number(&self.d),
            q: to_number(&self.q),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadraticSurd {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SurdJson::deserialize(deserializer)?;
        QuadraticSurd::new(
            from_number::<D::Error>(&raw.p)?,
            from_number::<D::Error>(&raw.b)?,
            from_number::<D::Error>(&raw.d)?,
            from_number::<D::Error>(&raw.q)?,
        )
        .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn surd(p: i64, b: i64, d: i64, q: i64) -> QuadraticSurd {
        QuadraticSurd::new(p, b, d, q).unwrap()
    }

    fn fields(x: &QuadraticSurd) -> (i64, i64, i64, i64) {
        (
            x.p.to_i64().unwrap(),
            x.b.to_i64().unwrap(),
            x.d.to_i64().unwrap(),
            x.q.to_i64().unwrap(),
        )
    }

    #[test]
    fn normal_form() {
        assert_eq!(fields(&surd(9, 1, 221, 10)), (9, 1, 221, 10));
        assert_eq!(fields(&surd(-60, 12, 143, 59)), (-60, 12, 143, 59));
        assert_eq!(fields(&surd(0, 1, 8, 2)), (0, 1, 2, 1));
        assert_eq!(fields(&surd(6, -12, 143, -59)), (-6, 12, 143, 59));
        // √(35/6) − 1 = (−6 + √210)/6
        assert_eq!(fields(&surd(-6, 1, 210, 6)), (-6, 1, 210, 6));
        assert_eq!(fields(&surd(4, 2, 12, 2)), (2, 2, 3, 1));
    }

    #[test]
    fn rational_values_rejected() {
        assert!(QuadraticSurd::new(1, 1, 9, 2).is_err());
        assert!(QuadraticSurd::new(1, 3, 50 * 2, 2).is_err());
        assert!(QuadraticSurd::new(1, 0, 2, 1).is_err());
        assert!(QuadraticSurd::new(1, 1, 2, 0).is_err());
        assert!(QuadraticSurd::new(1, 1, -2, 1).is_err());
    }

    #[test]
    fn signs_and_floor() {
        let x = surd(1, -1, 2, 1);
        assert_eq!(x.signum(), Ordering::Less);
        assert_eq!(x.floor(), BigInt::from(-1));
        assert_eq!(surd(9, 1, 221, 10).floor(), BigInt::from(2));
        assert_eq!(surd(-1, 1, 6, 1).floor(), BigInt::from(1));
        assert_eq!(surd(-5, 2, 6, 1).signum(), Ordering::Less);
        assert_eq!(surd(0, 1, 2, 1).cmp_rational(&rat(7, 5)), Ordering::Greater);
        assert_eq!(surd(0, 1, 2, 1).cmp_rational(&rat(3, 2)), Ordering::Less);
    }

    #[test]
    fn expansions_of_known_values() {
        let silver = surd(1, 1, 2, 1);
        assert_eq!(silver.cf_expand().unwrap().to_string(), "[(2)]");
        let gamma5 = surd(9, 1, 221, 10);
        assert_eq!(gamma5.cf_expand().unwrap().to_string(), "[(2,2,1,1)]");
        let golden = surd(1, 1, 5, 2);
        assert_eq!(golden.cf_expand().unwrap().to_string(), "[(1)]");
        let x = surd(-1, 1, 6, 1);
        assert_eq!(x.cf_expand().unwrap().to_string(), "[1,(2,4)]");
        assert_eq!(surd(0, 1, 7, 5).cf_prefix(4).unwrap(), vec![0, 1, 1, 8]);
        assert!(surd(1, -1, 2, 1).cf_expand().is_err());
    }

    #[test]
    fn mobius_and_reciprocal() {
        let r2 = surd(0, 1, 2, 1);
        assert_eq!(r2.recip(), surd(0, 1, 2, 2));
        let one = BigInt::one();
        let zero = BigInt::zero();
        // x -> x + 1
        assert_eq!(r2.mobius(&one, &one, &zero, &one).unwrap(), surd(1, 1, 2, 1));
        assert_eq!(r2.add_integer(&BigInt::from(-3)), surd(-3, 1, 2, 1));
        assert!(r2.mobius(&one, &one, &one, &one).is_err());
    }

    #[test]
    fn plain_and_json_formats() {
        assert_eq!(surd(9, 1, 221, 10).to_string(), "(9+√221)/10");
        assert_eq!(surd(-1, 1, 6, 1).to_string(), "√6-1");
        assert_eq!(surd(-60, 12, 143, 59).to_string(), "(12√143-60)/59");
        assert_eq!(surd(0, 1, 2, 1).to_string(), "√2");
        assert_eq!(surd(1, -1, 2, 1).to_string(), "1-√2");
        let x = surd(-2, 2, 3, 1);
        let json = x.to_json().to_string();
        assert_eq!(json, r#"{"p":-2,"b":2,"d":3,"q":1}"#);
        assert_eq!(QuadraticSurd::from_json(&json).unwrap(), x);
        let big = r#"{"p":1,"b":1,"d":5479695348949257917123,"q":2}"#;
        assert_eq!(QuadraticSurd::from_json(big).unwrap().to_json().to_string(), big);
    }

    #[test]
    fn conjugates_share_fields() {
        let x = surd(23, 1, 1517, 26);
        let c = x.conjugate();
        assert_eq!((c.p(), c.d(), c.q()), (x.p(), x.d(), x.q()));
        assert_eq!(c.b(), &-x.b());
        assert_eq!(x.cmp_same_field(&c), Some(Ordering::Greater));
    }
}
