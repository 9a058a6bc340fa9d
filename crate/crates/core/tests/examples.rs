//! Worked values from the public API, one test per module.

use num_bigint::{BigInt, BigUint};

use conum_core::arith::parse_rational;
use conum_core::conumerator::{cds, con, fib, num};
use conum_core::factorize::{factor, factor_biguint, DEFAULT_BUDGET};
use conum_core::jimm::{fiber, jimm, jimm_qstar, jimm_surd, jimm_word};
use conum_core::markov::{c_matrix, char_pair, find_triple, fib_markov_jimm, gamma, jimm_gamma, markov_tree, MarkovTriple};
use conum_core::pgl2::{alpha, alpha_magic, decompose};
use conum_core::variations::{
    cosc, ell, eta, g_ratio, h_ratio, kappa, mixed_solution, osc, weighted_con, weighted_num, CoeffParams, Flavor,
};
use conum_core::{ContinuedFraction, JimmValue, Mat2, PeriodicCF, QuadraticSurd, Rational};

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn cf(d: &[u64]) -> ContinuedFraction {
    ContinuedFraction::new(d.to_vec()).unwrap()
}

fn surd(p: i64, b: i64, d: i64, den: i64) -> QuadraticSurd {
    QuadraticSurd::new(p, b, d, den).unwrap()
}

fn mat(p: i64, q: i64, r: i64, s: i64) -> Mat2 {
    Mat2::new(p, q, r, s).unwrap()
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

#[test]
fn continued_fractions() {
    assert_eq!(ContinuedFraction::from_rational(&q("41/19")).unwrap().digits(), &[2, 6, 3]);
    assert_eq!(ContinuedFraction::from_rational(&q("1")).unwrap().digits(), &[1]);
    assert_eq!(ContinuedFraction::from_rational(&q("5/3")).unwrap().digits(), &[1, 1, 2]);
    assert_eq!(cf(&[2, 6, 3]).to_rational(), q("41/19"));
    assert_eq!(cf(&[1]).to_rational(), q("1"));
    let alt = cf(&[3, 1]);
    assert!(!alt.is_canonical());
    assert_eq!(alt.to_rational(), q("4"));
}

#[test]
fn surds() {
    let g5 = surd(9, 1, 221, 10);
    assert_eq!(g5.to_string(), "(9+√221)/10");
    assert_eq!(surd(-60, 12, 143, 59).to_string(), "(12√143-60)/59");
    let r2 = surd(0, 1, 8, 2);
    assert_eq!((r2.p(), r2.b(), r2.d(), r2.q()), (&0.into(), &1.into(), &2.into(), &1.into()));
    assert!(QuadraticSurd::new(1, 2, 9, 1).is_err());

    let expand = |s: &QuadraticSurd| s.cf_expand().unwrap();
    assert_eq!(expand(&surd(1, 1, 2, 1)), PeriodicCF::new(vec![], vec![2]).unwrap());
    assert_eq!(expand(&g5), PeriodicCF::new(vec![], vec![2, 2, 1, 1]).unwrap());
    assert_eq!(expand(&surd(1, 1, 5, 2)), PeriodicCF::new(vec![], vec![1]).unwrap());

    assert_eq!(PeriodicCF::new(vec![], vec![2]).unwrap().to_surd(), surd(1, 1, 2, 1));
    assert_eq!(PeriodicCF::new(vec![1], vec![2, 4]).unwrap().to_surd(), surd(-1, 1, 6, 1));
    assert_eq!(PeriodicCF::new(vec![], vec![1]).unwrap().to_surd(), surd(1, 1, 5, 2));
}

#[test]
fn fixed_points() {
    let fp = |m: Mat2| m.fixed_points().unwrap();
    assert_eq!(fp(mat(5, 2, 2, 1)), (surd(1, 1, 2, 1), surd(1, -1, 2, 1)));
    assert_eq!(fp(mat(3, 10, 2, 7)), (surd(-1, 1, 6, 1), surd(-1, -1, 6, 1)));
    assert_eq!(fp(mat(2, 1, 1, 1)), (surd(1, 1, 5, 2), surd(1, -1, 5, 2)));
    assert!(mat(1, 1, 0, 1).fixed_points().is_err());
}

#[test]
fn conumerator_values() {
    assert_eq!(fib(0), big(0));
    assert_eq!(fib(1), big(1));
    assert_eq!(fib(10), big(55));
    assert_eq!(num(&q("22/7")).unwrap(), big(22));
    assert_eq!(num(&q("41/19")).unwrap(), big(41));
    assert_eq!(con(&q("1")).unwrap(), big(1));
    assert_eq!(con(&q("7")).unwrap(), big(21));
    assert_eq!(con(&q("41/19")).unwrap(), big(112));
    assert_eq!(con(&q("1/41")).unwrap(), big(165580141));
    assert_eq!(con(&q("19/41")).unwrap(), big(81));
    assert!(con(&q("0")).is_err());
    assert!(con(&q("-2/3")).is_err());
    assert_eq!(cds(&q("4")).unwrap(), BigInt::from(1));
    assert_eq!(cds(&q("3/2")).unwrap(), BigInt::from(5));
    assert_eq!(cds(&q("5/2")).unwrap(), BigInt::from(-5));
}

#[test]
fn jimm_values() {
    assert_eq!(jimm(&q("1")).unwrap(), q("1"));
    assert_eq!(jimm(&q("5/3")).unwrap(), q("4"));
    assert_eq!(jimm(&q("3")).unwrap(), q("3/2"));
    assert_eq!(jimm_word(&cf(&[2, 6, 3])).to_rational(), q("112/81"));
    assert_eq!(jimm_word(&cf(&[1, 1, 2])).digits(), &[3, 1]);
    assert_eq!(jimm_word(&cf(&[2, 2])).digits(), &[1, 2, 1]);
    assert_eq!(jimm_qstar(&q("-1")).unwrap(), q("-1"));
    assert_eq!(jimm_qstar(&q("-3")).unwrap(), q("-2/3"));
    assert_eq!(jimm_qstar(&q("5/3")).unwrap(), q("4"));

    let j = |s: QuadraticSurd| jimm_surd(&s).unwrap();
    assert_eq!(j(surd(1, 1, 2, 1)), JimmValue::Surd(surd(0, 1, 2, 1)));
    assert_eq!(j(surd(9, 1, 221, 10)), JimmValue::Surd(surd(-1, 1, 6, 1)));
    assert_eq!(j(surd(1, 1, 5, 2)), JimmValue::Infinity);
    let x = PeriodicCF::new(vec![], vec![2, 2, 1, 1, 1, 1]).unwrap().to_surd();
    let y = PeriodicCF::new(vec![1], vec![2, 6]).unwrap().to_surd();
    assert_eq!(j(x), JimmValue::Surd(y));
}

#[test]
fn fibers() {
    assert_eq!(fiber(1).unwrap(), vec![q("1")]);
    for p in [3u64, 5] {
        let f = fiber(p).unwrap();
        assert_eq!(f.len() as u64, p - 1);
        assert!(f.iter().all(|x| con(x).unwrap() == big(p)));
    }
}

#[test]
fn pgl2_values() {
    assert!(decompose(&Mat2::identity()).is_empty());
    assert_eq!(decompose(&mat(0, 1, 1, 0)).to_string(), "U");
    assert_eq!(decompose(&mat(1, 1, 0, 1)).to_string(), "K·V");
    let cases = [
        (mat(2, 1, 1, 1), mat(1, 2, 0, 1)),
        (mat(5, 2, 2, 1), mat(3, 4, 2, 3)),
        (mat(12, 7, 5, 3), mat(3, 10, 2, 7)),
        (mat(31, 19, 13, 8), mat(3, 16, 2, 11)),
    ];
    for (c, image) in cases {
        assert_eq!(alpha(&c), image, "alpha of {c}");
        assert_eq!(alpha_magic(&c).unwrap(), image, "magic alpha of {c}");
    }
}

#[test]
fn markov_values() {
    assert_eq!(markov_tree(0), vec![MarkovTriple::root()]);
    let cp = |m: u64| char_pair(&find_triple(&big(m)).unwrap());
    for (m, u, v) in [(2u64, 1u64, 1u64), (5, 2, 1), (13, 5, 2)] {
        assert_eq!((cp(m).u, cp(m).v), (big(u), big(v)));
    }
    assert_eq!(gamma(&big(2), &cp(2)).unwrap(), surd(1, 1, 2, 1));
    assert_eq!(gamma(&big(5), &cp(5)).unwrap(), surd(9, 1, 221, 10));
    assert_eq!(gamma(&big(13), &cp(13)).unwrap(), surd(23, 1, 1517, 26));
    assert_eq!(c_matrix(&big(2), &cp(2)).unwrap(), mat(5, 2, 2, 1));
    assert_eq!(c_matrix(&big(5), &cp(5)).unwrap(), mat(12, 7, 5, 3));
    assert_eq!(c_matrix(&big(13), &cp(13)).unwrap(), mat(31, 19, 13, 8));
    let jg = |m: u64| jimm_gamma(&big(m), &cp(m)).unwrap();
    assert_eq!(jg(2), JimmValue::Surd(surd(0, 1, 2, 1)));
    assert_eq!(jg(5), JimmValue::Surd(surd(-1, 1, 6, 1)));
    assert_eq!(jg(433), JimmValue::Surd(surd(-60, 12, 143, 59)));
    assert_eq!(fib_markov_jimm(2).unwrap(), surd(-1, 1, 6, 1));
    assert_eq!(fib_markov_jimm(3).unwrap(), surd(-2, 1, 12, 1));
    assert_eq!(fib_markov_jimm(4).unwrap(), surd(-3, 1, 20, 1));
    assert!(find_triple(&big(7)).is_err());
}

#[test]
fn coefficient_systems() {
    let p = |a, b, c| CoeffParams::integers(a, b, c).unwrap();
    assert_eq!(kappa(&p(1, 1, 1), &q("41/19")).unwrap(), q("41"));
    assert_eq!(kappa(&p(1, 1, 1), &q("1")).unwrap(), q("1"));
    assert_eq!(kappa(&p(2, 1, 1), &q("2")).unwrap(), q("3"));
    assert_eq!(eta(&p(1, 1, 1), &q("19/41")).unwrap(), q("81"));
    assert_eq!(eta(&p(1, 1, 2), &q("1/2")).unwrap(), q("2"));
    assert_eq!(g_ratio(&p(1, 1, 1), &q("7/3")).unwrap(), q("7/3"));
    assert_eq!(g_ratio(&p(2, 1, 1), &q("2")).unwrap(), q("3"));
    assert_eq!(h_ratio(&p(1, 1, 1), &q("5/3")).unwrap(), q("4"));
    assert_eq!(h_ratio(&p(1, 1, 1), &q("1")).unwrap(), q("1"));
    // α = 2, β = 1: h(2) = 2 + 1/h(1) = 3 and h(3) = 2 + 1/h(2) = 7/3.
    assert_eq!(h_ratio(&p(2, 1, 1), &q("2")).unwrap(), q("3"));
    assert_eq!(h_ratio(&p(2, 1, 1), &q("3")).unwrap(), q("7/3"));
}

#[test]
fn weighted_and_mixed() {
    assert_eq!(weighted_num(0, &q("41/19")).unwrap(), q("41"));
    assert_eq!(weighted_num(-1, &q("41/19")).unwrap(), q("779"));
    assert_eq!(weighted_num(-2, &q("3/2")).unwrap(), q("12"));
    assert_eq!(weighted_con(0, &q("19/41")).unwrap(), q("81"));
    assert_eq!(weighted_con(-1, &q("3/2")).unwrap(), q("6"));
    assert_eq!(weighted_con(-2, &q("2")).unwrap(), q("2"));
    let p = |a, b, c| CoeffParams::integers(a, b, c).unwrap();
    assert_eq!(mixed_solution(&p(1, 1, 1), 0, Flavor::Num, &q("5/3")).unwrap(), q("5"));
    assert_eq!(mixed_solution(&p(1, -1, 1), -2, Flavor::Num, &q("2")).unwrap(), q("0"));
    assert_eq!(mixed_solution(&p(1, 1, 1), -1, Flavor::Con, &q("3/2")).unwrap(), q("6"));
}

#[test]
fn digit_functions() {
    assert_eq!(osc(&q("1")).unwrap(), BigInt::from(1));
    assert_eq!(osc(&q("5/3")).unwrap(), BigInt::from(2));
    assert_eq!(osc(&q("14/3")).unwrap(), BigInt::from(5));
    assert_eq!(cosc(&q("1")).unwrap(), BigInt::from(1));
    assert_eq!(cosc(&q("5/3")).unwrap(), BigInt::from(4));
    assert_eq!(cosc(&q("2")).unwrap(), BigInt::from(2));
    assert_eq!(ell(&q("1")).unwrap(), BigInt::from(1));
    assert_eq!(ell(&q("41/19")).unwrap(), BigInt::from(11));
    assert_eq!(ell(&q("5/3")).unwrap(), BigInt::from(4));
}

#[test]
fn factorization() {
    assert_eq!(factor(112).unwrap(), vec![2, 2, 2, 2, 7]);
    assert_eq!(factor(165580141).unwrap(), vec![2789, 59369]);
    assert_eq!(factor(433494437).unwrap(), vec![433494437]);
    let f = factor_biguint(&fib(100), DEFAULT_BUDGET).unwrap();
    assert!(f.is_complete());
    let product: BigUint = f.primes.iter().product();
    assert_eq!(product, fib(100));
}
