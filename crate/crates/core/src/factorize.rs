//! Integer factorization for checking factored tables.
//!
//! Trial division to 10^5, deterministic Miller-Rabin below 2^64 and
//! Pollard-Brent rho with fixed increments. A slower big-integer path is used
//! for discriminants that overflow 64 bits.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 100_000;

/// Witnesses that make Miller-Rabin exact for every `n < 3.3 · 10^24`.
const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Default iteration budget for the big-integer rho.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Prime factors of `n`, sorted, with multiplicity.
pub fn factor(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::domain("cannot factor 0"));
    }
    let mut out = Vec::new();
    let rest = trial_divide(n, &mut out);
    split_u64(rest, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn trial_divide(mut n: u64, out: &mut Vec<u64>) -> u64 {
    for p in std::iter::once(2).chain((3..TRIAL_LIMIT).step_by(2)) {
        if p * p > n {
            break;
        }
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
    }
    if n > 1 && n < TRIAL_LIMIT * TRIAL_LIMIT {
        out.push(n);
        return 1;
    }
    n
}

fn split_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho_u64(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic primality test for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    WITNESSES[..12].iter().all(|&a| {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

/// A nontrivial factor of an odd composite `n`.
fn rho_u64(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let (mut x, mut ys);
        let mut g;
        loop {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            loop {
                ys = y;
                for _ in 0..128.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += 128;
                if k >= r || g != 1 {
                    break;
                }
            }
            r *= 2;
            if g != 1 {
                break;
            }
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g != 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

/// Factorization of an arbitrary positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigFactorization {
    /// Prime factors found, sorted, with multiplicity.
    pub primes: Vec<BigUint>,
    /// Composite part left when the rho budget ran out (1 if complete).
    pub cofactor: BigUint,
}

impl BigFactorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }
}

/// Factors `n`, giving up on composite parts after `budget` rho iterations.
pub fn factor_biguint(n: &BigUint, budget: u64) -> Result<BigFactorization> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor 0"));
    }
    if let Some(small) = n.to_u64() {
        let primes = factor(small)?.into_iter().map(BigUint::from).collect();
        return Ok(BigFactorization { primes, cofactor: BigUint::one() });
    }
    let mut primes = Vec::new();
    let mut n = n.clone();
    for p in std::iter::once(2u32).chain((3..TRIAL_LIMIT as u32).step_by(2)) {
        while (&n % p).is_zero() {
            primes.push(BigUint::from(p));
            n /= p;
        }
    }
    let mut cofactor = BigUint::one();
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(small) = m.to_u64() {
            primes.extend(factor(small)?.into_iter().map(BigUint::from));
        } else if is_probable_prime(&m) {
            primes.push(m);
        } else if let Some(d) = perfect_square_root(&m).or_else(|| rho_big(&m, budget)) {
            stack.push(&m / &d);
            stack.push(d);
        } else {
            cofactor *= m;
        }
    }
    primes.sort();
    Ok(BigFactorization { primes, cofactor })
}

/// Miller-Rabin with the fixed witnesses; exact below 3.3 · 10^24.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    WITNESSES.iter().all(|&a| {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            return true;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n1 {
                return true;
            }
        }
        false
    })
}

fn perfect_square_root(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn rho_big(n: &BigUint, budget: u64) -> Option<BigUint> {
    let mut spent = 0u64;
    for c in 1u32..=16 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut y, mut r, mut q) = (BigUint::from(2u32), 1u64, BigUint::one());
        let mut x;
        let mut ys;
        let mut g: BigUint;
        loop {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            loop {
                ys = y.clone();
                let steps = 128.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                spent += steps;
                g = q.gcd(n);
                k += 128;
                if k >= r || !g.is_one() || spent > budget {
                    break;
                }
            }
            r *= 2;
            if !g.is_one() || spent > budget {
                break;
            }
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
        if spent > budget {
            return None;
        }
    }
    None
}

/// Splits `n = root² · core` with `core` squarefree.
///
/// If factoring stalls on a composite cofactor, that cofactor is kept in the
/// core, which is then squarefree only up to the rho budget.
pub fn square_part(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    let f = factor_biguint(n, DEFAULT_BUDGET).expect("n is nonzero");
    let (mut root, mut core) = (BigUint::one(), f.cofactor);
    for (p, e) in multiplicities(&f.primes) {
        root *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p;
        }
    }
    (root, core)
}

fn multiplicities<T: Ord + Clone>(primes: &[T]) -> BTreeMap<T, u32> {
    let mut m = BTreeMap::new();
    for p in primes {
        *m.entry(p.clone()).or_insert(0) += 1;
    }
    m
}

/// Renders a factorization as `p1^e1×p2^e2`, primes ascending. `1` renders
/// as `"1"`.
pub fn render(primes: &[u64]) -> String {
    if primes.is_empty() {
        return "1".to_string();
    }
    multiplicities(primes)
        .into_iter()
        .map(|(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join("×")
}

/// Parses a factored value such as `59369x2789` or `2^4×7` and returns the
/// sorted prime multiset. Factors are not checked for primality.
pub fn parse_factored(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for term in s.split(['x', '×', '*']) {
        let term = term.trim();
        let (base, exp) = match term.split_once('^') {
            Some((b, e)) => (b, e),
            None => (term, "1"),
        };
        let bad = || Error::parse(format!("invalid factored value {s:?}"));
        let base: u64 = base.trim().parse().map_err(|_| bad())?;
        let exp: u32 = exp.trim().parse().map_err(|_| bad())?;
        if base < 2 || exp == 0 {
            return Err(bad());
        }
        out.extend(std::iter::repeat(base).take(exp as usize));
    }
    out.sort_unstable();
    Ok(out)
}
