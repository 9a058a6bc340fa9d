//! Markov triples, characteristic numbers, Markov irrationals and their
//! images under `J`.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::{Mat2, QuadraticSurd};
use crate::conumerator::fib_signed;
use crate::error::{Error, Result};
use crate::jimm::{jimm_surd, JimmValue};
use crate::pgl2::alpha;

/// A solution of `x² + y² + z² = 3xyz`, stored as `(a, m, b)` with `m` the
/// largest component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkovTriple {
    a: BigUint,
    m: BigUint,
    b: BigUint,
}

impl MarkovTriple {
    pub fn root() -> Self {
        MarkovTriple { a: BigUint::one(), m: BigUint::one(), b: BigUint::one() }
    }

    /// Validates a triple given in any order. The largest component goes in
    /// the middle; the other two keep their relative order.
    pub fn new(x: impl Into<BigUint>, y: impl Into<BigUint>, z: impl Into<BigUint>) -> Result<Self> {
        let mut v = [x.into(), y.into(), z.into()];
        if v.iter().any(|c| c.is_zero()) {
            return Err(Error::domain("Markov triples are positive"));
        }
        let lhs: BigUint = v.iter().map(|c| c * c).sum();
        if lhs != BigUint::from(3u32) * &v[0] * &v[1] * &v[2] {
            return Err(Error::domain(format!("({}, {}, {}) is not a Markov triple", v[0], v[1], v[2])));
        }
        let i = (0..3).max_by(|&i, &j| v[i].cmp(&v[j]).then(j.cmp(&i))).unwrap();
        let m = std::mem::take(&mut v[i]);
        let rest: Vec<BigUint> = v.into_iter().enumerate().filter(|&(j, _)| j != i).map(|(_, c)| c).collect();
        let [a, b]: [BigUint; 2] = rest.try_into().unwrap();
        Ok(MarkovTriple { a, m, b })
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn m(&self) -> &BigUint {
        &self.m
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn satisfies_equation(&self) -> bool {
        let (a, m, b) = (&self.a, &self.m, &self.b);
        a * a + m * m + b * b == BigUint::from(3u32) * a * m * b
    }

    pub fn is_pairwise_coprime(&self) -> bool {
        self.a.gcd(&self.m).is_one() && self.m.gcd(&self.b).is_one() && self.a.gcd(&self.b).is_one()
    }

    /// `(a, 3am − b, m)` and `(m, 3mb − a, b)`. The first two levels have a
    /// single new neighbour.
    pub fn children(&self) -> Vec<MarkovTriple> {
        let three = BigUint::from(3u32);
        let left = MarkovTriple {
            a: self.a.clone(),
            m: &three * &self.a * &self.m - &self.b,
            b: self.m.clone(),
        };
        if self.m <= BigUint::from(2u32) {
            return vec![left];
        }
        let right = MarkovTriple {
            a: self.m.clone(),
            m: &three * &self.m * &self.b - &self.a,
            b: self.b.clone(),
        };
        vec![left, right]
    }

    pub fn to_json(&self) -> Value {
        json!([number(&self.a), number(&self.m), number(&self.b)])
    }
}

fn number(n: &BigUint) -> serde_json::Number {
    n.to_string().parse().expect("integers are valid JSON numbers")
}

impl fmt::Display for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.m, self.b)
    }
}

/// All triples up to `depth` levels below `(1, 1, 1)`, breadth first.
pub fn markov_tree(depth: u32) -> Vec<MarkovTriple> {
    let mut out = Vec::new();
    let mut level = vec![MarkovTriple::root()];
    for d in 0..=depth {
        let next = if d < depth { level.iter().flat_map(|t| t.children()).collect() } else { Vec::new() };
        out.append(&mut level);
        level = next;
    }
    out
}

/// The tree as nested `{"triple": [a, m, b], "children": [...]}` objects.
pub fn markov_tree_json(depth: u32) -> Value {
    fn node(t: &MarkovTriple, depth: u32) -> Value {
        let children: Vec<Value> = if depth == 0 {
            Vec::new()
        } else {
            t.children().iter().map(|c| node(c, depth - 1)).collect()
        };
        json!({ "triple": t.to_json(), "children": children })
    }
    node(&MarkovTriple::root(), depth)
}

/// The distinct maxima occurring up to `depth`, sorted.
pub fn markov_numbers(depth: u32) -> Vec<BigUint> {
    let mut ms: Vec<BigUint> = markov_tree(depth).into_iter().map(|t| t.m).collect();
    ms.sort();
    ms.dedup();
    ms
}

/// A triple with maximum `m`, found by searching the tree below `m`.
pub fn find_triple(m: &BigUint) -> Result<MarkovTriple> {
    let mut queue = VecDeque::from([MarkovTriple::root()]);
    while let Some(t) = queue.pop_front() {
        if t.m == *m {
            return Ok(t);
        }
        queue.extend(t.children().into_iter().filter(|c| c.m <= *m));
    }
    Err(Error::domain(format!("{m} is not a Markov number")))
}

/// The characteristic number `u` of a triple and `v = (u² + 1)/m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPair {
    pub u: BigUint,
    pub v: BigUint,
}

impl CharPair {
    fn check(&self, m: &BigUint) -> Result<()> {
        if &self.u * &self.u + 1u32 != m * &self.v {
            return Err(Error::domain(format!(
                "u = {}, v = {} do not satisfy u² + 1 = {m}·v",
                self.u, self.v
            )));
        }
        Ok(())
    }
}

/// Least `u` with `m2·u ≡ m1 (mod m)` over both orderings of the other two
/// components, which amounts to `min(u, m − u)`.
pub fn char_pair(t: &MarkovTriple) -> CharPair {
    let m = &t.m;
    if m.is_one() {
        return CharPair { u: BigUint::zero(), v: BigUint::one() };
    }
    let inv = mod_inverse(&t.b, m).expect("Markov components are coprime");
    let u = (&t.a * inv) % m;
    let u = u.clone().min(m - &u);
    let v = (&u * &u + 1u32) / m;
    CharPair { u, v }
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let (a, m) = (BigInt::from(a.clone()), BigInt::from(m.clone()));
    let e = a.extended_gcd(&m);
    e.gcd.is_one().then(|| e.x.mod_floor(&m).to_biguint().unwrap())
}

/// `γ_m = (m + 2u + √(9m² − 4)) / (2m)`.
pub fn gamma(m: &BigUint, cp: &CharPair) -> Result<QuadraticSurd> {
    cp.check(m)?;
    let m = BigInt::from(m.clone());
    let u = BigInt::from(cp.u.clone());
    QuadraticSurd::new(&m + BigInt::from(2) * &u, 1, BigInt::from(9) * &m * &m - 4, BigInt::from(2) * &m)
}

/// `C_m = [[2m + u, 2m − u − v], [m, m − u]]`, which fixes `γ_m`.
pub fn c_matrix(m: &BigUint, cp: &CharPair) -> Result<Mat2> {
    cp.check(m)?;
    let m = BigInt::from(m.clone());
    let (u, v) = (BigInt::from(cp.u.clone()), BigInt::from(cp.v.clone()));
    let two_m = BigInt::from(2) * &m;
    Mat2::new(&two_m + &u, &two_m - &u - &v, m.clone(), &m - &u)
}

/// `J(γ_m)` as a fixed point of `α(C_m)`; `m = 1` gives infinity.
pub fn jimm_gamma(m: &BigUint, cp: &CharPair) -> Result<JimmValue> {
    let c = c_matrix(m, cp)?;
    if m.is_one() {
        return Ok(JimmValue::Infinity);
    }
    let (r1, r2) = alpha(&c).fixed_points()?;
    match (r1.is_positive(), r2.is_positive()) {
        (true, false) => Ok(JimmValue::Surd(r1)),
        (false, true) => Ok(JimmValue::Surd(r2)),
        _ => jimm_surd(&gamma(m, cp)?),
    }
}

/// The matrix `[[2F(2n+1) + F(2n−1), F(2n+2) − F(2n−3)], [F(2n+1), F(2n)]]`
/// fixing `γ_m` for the odd-index Fibonacci Markov number `m = F(2n+1)`.
pub fn fibonacci_markov_matrix(n: u32) -> Mat2 {
    let f = |k: i64| fib_signed(k);
    let n = n as i64;
    Mat2::new(
        BigInt::from(2) * f(2 * n + 1) + f(2 * n - 1),
        f(2 * n + 2) - f(2 * n - 3),
        f(2 * n + 1),
        f(2 * n),
    )
    .expect("Fibonacci Markov matrices are unimodular")
}

/// `J(γ_m)` for `m = F(2n+1)`, read off `α(M_n) = [[3, 6n − 2], [2, 4n − 1]]`.
/// The result is `√(n² + n) − (n − 1)`.
pub fn fib_markov_jimm(n: u32) -> Result<QuadraticSurd> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let image = alpha(&fibonacci_markov_matrix(n));
    let nn = n as i64;
    let expected = Mat2::new(3, 6 * nn - 2, 2, 4 * nn - 1)?;
    if image != expected {
        return Err(Error::Degenerate(format!("α(M_{n}) = {image}, expected {expected}")));
    }
    Ok(image.fixed_points()?.0)
}
