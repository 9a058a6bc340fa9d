//! `PGL(2, Z)` as a group generated by three involutions, and its outer
//! automorphism `α`.
//!
//! `V: x ↦ −x`, `K: x ↦ 1 − x` and `U: x ↦ 1/x`. The automorphism fixes `U`
//! and `K` and sends `V` to `UV`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{Mat2, Rational};
use crate::conumerator::con;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    U,
    V,
    K,
}

impl Generator {
    pub fn matrix(self) -> Mat2 {
        match self {
            Generator::U => Mat2::new(0, 1, 1, 0),
            Generator::V => Mat2::new(-1, 0, 0, 1),
            Generator::K => Mat2::new(-1, 1, 0, 1),
        }
        .expect("generators are unimodular")
    }

    fn letter(self) -> char {
        match self {
            Generator::U => 'U',
            Generator::V => 'V',
            Generator::K => 'K',
        }
    }
}

/// A freely reduced word over `{U, V, K}`, read left to right as a product
/// of matrices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    letters: Vec<Generator>,
}

impl GeneratorWord {
    /// Builds a word, cancelling adjacent equal letters.
    pub fn new(letters: impl IntoIterator<Item = Generator>) -> Self {
        let mut w = GeneratorWord::default();
        for g in letters {
            w.push(g);
        }
        w
    }

    fn push(&mut self, g: Generator) {
        if self.letters.last() == Some(&g) {
            self.letters.pop();
        } else {
            self.letters.push(g);
        }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> Mat2 {
        self.letters
            .iter()
            .fold(Mat2::identity(), |m, g| m.mul(&g.matrix()))
    }

    /// Letterwise image under `α`.
    pub fn alpha(&self) -> GeneratorWord {
        GeneratorWord::new(self.letters.iter().flat_map(|&g| match g {
            Generator::V => vec![Generator::U, Generator::V],
            other => vec![other],
        }))
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(GeneratorWord::default());
        }
        s.chars()
            .filter(|c| !matches!(c, '·' | '*' | '.' | ' '))
            .map(|c| match c {
                'U' => Ok(Generator::U),
                'V' => Ok(Generator::V),
                'K' => Ok(Generator::K),
                _ => Err(Error::parse(format!("unknown generator {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(GeneratorWord::new)
    }
}

/// `T^k` where `T = KV: x ↦ x + 1` and `T⁻¹ = VK`.
fn translation(k: &BigInt) -> impl Iterator<Item = Generator> {
    let pair = if k.is_negative() {
        [Generator::V, Generator::K]
    } else {
        [Generator::K, Generator::V]
    };
    let n: usize = k.magnitude().try_into().expect("translation exponent fits in usize");
    std::iter::repeat(pair).take(n).flatten()
}

/// Quotient `k` of `s` by `r` with `|s − k·r|` minimal; on a tie the
/// remainder keeps the sign of `r`.
fn nearest_quotient(s: &BigInt, r: &BigInt) -> BigInt {
    let (q, rem) = s.div_mod_floor(r);
    let twice = BigInt::from(2) * rem.abs();
    if twice > r.abs() {
        q + 1
    } else {
        q
    }
}

/// Writes `m` as a word in `U`, `V`, `K`.
///
/// Reduces the bottom row `(r, s)` by column operations, alternating
/// `M ↦ M·T^(−k)` (with `s − k·r` of least absolute value) and the column
/// swap `M ↦ M·U`, until `r = 0`. What remains is `T^c` or `T^c·V`, and the
/// recorded operations are undone on the right.
pub fn decompose(m: &Mat2) -> GeneratorWord {
    let mut cur = m.clone();
    let mut undo: Vec<Generator> = Vec::new();
    while !cur.r().is_zero() {
        let k = nearest_quotient(cur.s(), cur.r());
        if !k.is_zero() {
            let step = Mat2::new(1, -&k, 0, 1).expect("translations are unimodular");
            cur = cur.mul(&step);
            undo.splice(0..0, translation(&k));
        }
        cur = cur.mul(&Generator::U.matrix());
        undo.insert(0, Generator::U);
    }
    // Now cur = ±[[a, b], [0, d]] with a, d = ±1, and sign normalization
    // makes a = 1.
    let mut head: Vec<Generator> = Vec::new();
    if cur.s().is_positive() {
        head.extend(translation(cur.q()));
    } else {
        head.extend(translation(&-cur.q()));
        head.push(Generator::V);
    }
    GeneratorWord::new(head.into_iter().chain(undo))
}

/// The image of `m` under `α`, through its generator word.
pub fn alpha(m: &Mat2) -> Mat2 {
    decompose(m).alpha().evaluate()
}

/// `α(m)` for a matrix with positive entries, as differences of
/// conumerators of the images of 1 and 2.
///
/// With `A1 = con((p+q)/(r+s))`, `A2 = con((2p+q)/(2r+s))` and `B1`, `B2`
/// the same for the reciprocals, `α(m) = [[A2 − A1, 2A1 − A2], [B2 − B1, 2B1 − B2]]`.
pub fn alpha_magic(m: &Mat2) -> Result<Mat2> {
    let [p, q, r, s] = m.entries();
    if [p, q, r, s].iter().any(|e| !e.is_positive()) {
        return Err(Error::domain(format!("{m} must have positive entries")));
    }
    let ratio = |a: BigInt, b: BigInt| -> Result<BigInt> { Ok(con(&Rational::new(a, b))?.into()) };
    let a1 = ratio(p + q, r + s)?;
    let a2 = ratio(BigInt::from(2) * p + q, BigInt::from(2) * r + s)?;
    let b1 = ratio(r + s, p + q)?;
    let b2 = ratio(BigInt::from(2) * r + s, BigInt::from(2) * p + q)?;
    Mat2::new(
        &a2 - &a1,
        BigInt::from(2) * &a1 - &a2,
        &b2 - &b1,
        BigInt::from(2) * &b1 - &b2,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(p: i64, q: i64, r: i64, s: i64) -> Mat2 {
        Mat2::new(p, q, r, s).unwrap()
    }

    fn word(s: &str) -> GeneratorWord {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition_examples() {
        assert!(decompose(&Mat2::identity()).is_empty());
        assert_eq!(decompose(&m(0, 1, 1, 0)), word("U"));
        assert_eq!(decompose(&m(1, 1, 0, 1)), word("KV"));
        assert_eq!(word("KV").to_string(), "K·V");
        assert_eq!(word("K·V·V·K"), GeneratorWord::default());
    }

    #[test]
    fn markov_matrices() {
        assert_eq!(alpha(&m(2, 1, 1, 1)), m(1, 2, 0, 1));
        assert_eq!(alpha(&m(5, 2, 2, 1)), m(3, 4, 2, 3));
        assert_eq!(alpha(&m(12, 7, 5, 3)), m(3, 10, 2, 7));
        assert_eq!(alpha(&m(31, 19, 13, 8)), m(3, 16, 2, 11));
        assert_eq!(alpha_magic(&m(2, 1, 1, 1)).unwrap(), m(1, 2, 0, 1));
        assert_eq!(alpha_magic(&m(5, 2, 2, 1)).unwrap(), m(3, 4, 2, 3));
        assert_eq!(alpha_magic(&m(12, 7, 5, 3)).unwrap(), m(3, 10, 2, 7));
        assert_eq!(alpha_magic(&m(31, 19, 13, 8)).unwrap(), m(3, 16, 2, 11));
        assert!(alpha_magic(&m(1, 1, 0, 1)).is_err());
    }

    #[test]
    fn generator_images() {
        let t = m(1, 1, 0, 1);
        assert_eq!(alpha(&t), m(1, 1, 1, 0));
        assert_eq!(alpha(&m(0, 1, -1, 0)), m(-1, 0, 0, 1));
        assert_eq!(alpha(&Generator::U.matrix()), Generator::U.matrix());
        assert_eq!(alpha(&Generator::K.matrix()), Generator::K.matrix());
        assert_eq!(alpha(&Generator::V.matrix()), m(0, 1, -1, 0));
    }

    fn unimodular() -> impl Strategy<Value = Mat2> {
        // Random products of generators reach every element.
        proptest::collection::vec(0u8..3, 0..40).prop_map(|v| {
            GeneratorWord::new(v.into_iter().map(|i| [Generator::U, Generator::V, Generator::K][i as usize]))
                .evaluate()
        })
    }

    proptest! {
        #[test]
        fn decomposition_evaluates_back(x in unimodular()) {
            let w = decompose(&x);
            prop_assert_eq!(w.evaluate(), x);
            prop_assert!(w.letters().windows(2).all(|p| p[0] != p[1]));
        }

        #[test]
        fn alpha_is_an_involutive_homomorphism(x in unimodular(), y in unimodular()) {
            prop_assert_eq!(alpha(&alpha(&x)), x.clone());
            prop_assert_eq!(alpha(&x.mul(&y)), alpha(&x).mul(&alpha(&y)));
        }

        #[test]
        fn magic_formula_agrees(x in unimodular()) {
            if x.entries().iter().all(|e| e.is_positive()) {
                prop_assert_eq!(alpha_magic(&x).unwrap(), alpha(&x));
            }
        }
    }
}
