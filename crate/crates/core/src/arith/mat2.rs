use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use super::surd::QuadraticSurd;
use crate::error::{Error, Result};

/// An element of `PGL(2, Z)`: a 2x2 integer matrix `[[p, q], [r, s]]` with
/// determinant ±1, taken up to a global sign.
///
/// The stored representative has its first nonzero entry (in the order
/// `p, q, r, s`) positive, so derived equality is equality in `PGL(2, Z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    s: BigInt,
}

impl Mat2 {
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        s: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Mat2::raw(p.into(), q.into(), r.into(), s.into());
        if !m.det().abs().is_one() {
            return Err(Error::domain(format!("determinant of {m} is not ±1")));
        }
        Ok(m)
    }

    fn raw(p: BigInt, q: BigInt, r: BigInt, s: BigInt) -> Self {
        Mat2 { p, q, r, s }.sign_normalized()
    }

    fn sign_normalized(self) -> Self {
        let lead = [&self.p, &self.q, &self.r, &self.s]
            .into_iter()
            .find(|e| !e.is_zero())
            .map(|e| e.is_negative())
            .unwrap_or(false);
        if lead {
            Mat2 { p: -self.p, q: -self.q, r: -self.r, s: -self.s }
        } else {
            self
        }
    }

    pub fn identity() -> Self {
        Mat2::raw(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// The convergent matrix `∏ [[a, 1], [1, 0]]` of a digit word; maps `y`
    /// to `[a0, ..., ak, y]`.
    pub fn from_cf_digits(digits: &[u64]) -> Self {
        let (mut p, mut q, mut r, mut s) =
            (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
        for &a in digits {
            let a = BigInt::from(a);
            let np = &p * &a + &q;
            let nr = &r * &a + &s;
            q = std::mem::replace(&mut p, np);
            s = std::mem::replace(&mut r, nr);
        }
        Mat2::raw(p, q, r, s)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn trace(&self) -> BigInt {
        &self.p + &self.s
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        Mat2::raw(
            &self.p * &other.p + &self.q * &other.r,
            &self.p * &other.q + &self.q * &other.s,
            &self.r * &other.p + &self.s * &other.r,
            &self.r * &other.q + &self.s * &other.s,
        )
    }

    /// Inverse in `PGL(2, Z)`: the adjugate, since the determinant is ±1.
    pub fn inverse(&self) -> Mat2 {
        Mat2::raw(self.s.clone(), -&self.q, -&self.r, self.p.clone())
    }

    /// Möbius action on a rational; `None` is the point at infinity.
    pub fn apply_rational(&self, x: &Rational) -> Option<Rational> {
        let num = &self.p * x.numer() + &self.q * x.denom();
        let den = &self.r * x.numer() + &self.s * x.denom();
        (!den.is_zero()).then(|| Rational::new(num, den))
    }

    pub fn apply_surd(&self, x: &QuadraticSurd) -> Result<QuadraticSurd> {
        x.mobius(&self.p, &self.q, &self.r, &self.s)
    }

    /// The two fixed points of a hyperbolic matrix with irrational fixed
    /// points, larger first. They are the roots of `r·x² + (s − p)·x − q = 0`.
    pub fn fixed_points(&self) -> Result<(QuadraticSurd, QuadraticSurd)> {
        if self.r.is_zero() {
            return Err(Error::domain(format!("{self} fixes infinity")));
        }
        let lin = &self.p - &self.s;
        let disc = &lin * &lin + BigInt::from(4) * &self.q * &self.r;
        if !disc.is_positive() {
            return Err(Error::domain(format!("{self} is not hyperbolic")));
        }
        let two_r = BigInt::from(2) * &self.r;
        let plus = QuadraticSurd::new(lin.clone(), 1, disc.clone(), two_r.clone())
            .map_err(|_| Error::domain(format!("{self} has rational fixed points")))?;
        let minus = plus.conjugate();
        Ok(if self.r.is_positive() { (plus, minus) } else { (minus, plus) })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrix serializes")
    }

    /// Parses `[[p,q],[r,s]]`.
    /// Malformed text is a parse error; a determinant other than ±1 is a
    /// domain error.
    pub fn from_json(s: &str) -> Result<Self> {
        let rows: [[serde_json::Number; 2]; 2] =
            serde_json::from_str(s).map_err(|e| Error::parse(format!("invalid matrix JSON: {e}")))?;
        let parse = |n: &serde_json::Number| -> Result<BigInt> {
            n.to_string().parse().map_err(|_| Error::parse(format!("expected an integer, got {n}")))
        };
        Mat2::new(parse(&rows[0][0])?, parse(&rows[0][1])?, parse(&rows[1][0])?, parse(&rows[1][1])?)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.p, self.q, self.r, self.s)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mat2::from_json(s)
    }
}

fn number(n: &BigInt) -> serde_json::Number {
    n.to_string().parse().expect("integers are valid JSON numbers")
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [[number(&self.p), number(&self.q)], [number(&self.r), number(&self.s)]]
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: [[serde_json::Number; 2]; 2] = Deserialize::deserialize(deserializer)?;
        let parse = |n: &serde_json::Number| -> Result<BigInt, D::Error> {
            n.to_string()
                .parse()
                .map_err(|_| D::Error::custom(format!("expected an integer, got {n}")))
        };
        Mat2::new(
            parse(&rows[0][0])?,
            parse(&rows[0][1])?,
            parse(&rows[1][0])?,
            parse(&rows[1][1])?,
        )
        .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn m(p: i64, q: i64, r: i64, s: i64) -> Mat2 {
        Mat2::new(p, q, r, s).unwrap()
    }

    fn surd(p: i64, b: i64, d: i64, q: i64) -> QuadraticSurd {
        QuadraticSurd::new(p, b, d, q).unwrap()
    }

    #[test]
    fn sign_normalization_and_determinant() {
        assert_eq!(m(-1, 0, 0, -1), Mat2::identity());
        assert_eq!(m(0, -1, 1, 0), m(0, 1, -1, 0));
        assert!(Mat2::new(2, 0, 0, 1).is_err());
        assert_eq!(m(5, 2, 2, 1).det(), BigInt::one());
        assert_eq!(m(0, 1, 1, 0).det(), BigInt::from(-1));
    }

    #[test]
    fn fixed_points_examples() {
        assert_eq!(m(5, 2, 2, 1).fixed_points().unwrap(), (surd(1, 1, 2, 1), surd(1, -1, 2, 1)));
        assert_eq!(m(3, 10, 2, 7).fixed_points().unwrap(), (surd(-1, 1, 6, 1), surd(-1, -1, 6, 1)));
        assert_eq!(m(2, 1, 1, 1).fixed_points().unwrap(), (surd(1, 1, 5, 2), surd(1, -1, 5, 2)));
        assert_eq!(m(3, 4, 2, 3).fixed_points().unwrap(), (surd(0, 1, 2, 1), surd(0, -1, 2, 1)));
        // Negative lower-left entry keeps the larger root first.
        assert_eq!(m(-5, -2, -2, -1).fixed_points().unwrap().0, surd(1, 1, 2, 1));
    }

    #[test]
    fn fixed_points_rejects_non_hyperbolic() {
        assert!(m(1, 2, 0, 1).fixed_points().is_err());
        assert!(m(0, -1, 1, 0).fixed_points().is_err());
        assert!(m(0, -1, 1, 1).fixed_points().is_err());
        // [[2,3],[1,2]] fixes ±√3.
        assert!(m(2, 3, 1, 2).fixed_points().is_ok());
        // [[1,0],[1,-1]]: x = x/(x−1) gives x = 0 or 2.
        assert!(m(1, 0, 1, -1).fixed_points().is_err());
    }

    #[test]
    fn actions() {
        let t = m(1, 1, 0, 1);
        assert_eq!(t.apply_rational(&rat(2, 3)), Some(rat(5, 3)));
        assert_eq!(m(0, 1, 1, 0).apply_rational(&rat(0, 1)), None);
        assert_eq!(t.mul(&t.inverse()), Mat2::identity());
        assert_eq!(Mat2::from_cf_digits(&[2, 2]), m(5, 2, 2, 1));
    }

    #[test]
    fn json_format() {
        let x = m(-3, 4, 2, -3);
        assert_eq!(x.to_json().to_string(), "[[3,-4],[-2,3]]");
        assert_eq!(Mat2::from_json("[[3,-4],[-2,3]]").unwrap(), x);
        assert!(Mat2::from_json("[[2,0],[0,1]]").is_err());
    }
}
