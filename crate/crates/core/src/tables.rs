//! Reference tables: the factored conumerators `con(k/41)`, the expansions of
//! the first Markov irrationals and their images, and the Jimm images of
//! Markov irrationals up to `7.8 · 10^8`.

use num_bigint::{BigInt, BigUint};

use crate::arith::{PeriodicCF, QuadraticSurd};
use crate::error::{Error, Result};
use crate::factorize::parse_factored;
use crate::jimm::JimmValue;

const APPENDIX1: &str = include_str!("../data/appendix1.tsv");
const APPENDIX2: &str = include_str!("../data/appendix2.tsv");

/// The denominator of the factored conumerator table.
pub const APPENDIX1_DENOMINATOR: u64 = 41;

/// Markov numbers whose Jimm image is checked strictly.
pub const PINNED_MARKOV: [u64; 13] = [2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985, 1597];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRow {
    pub k: u64,
    /// The value as printed, e.g. `59369x2789`.
    pub printed: String,
    /// Its prime factors, sorted.
    pub primes: Vec<u64>,
}

fn data_lines(src: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    src.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i + 1, l.split('\t').map(str::trim).collect()))
}

/// `con(k/41)` for `k = 1..200`, factored.
pub fn appendix1() -> Result<Vec<FactoredRow>> {
    data_lines(APPENDIX1)
        .map(|(line, cols)| {
            let [k, printed] = cols[..] else {
                return Err(Error::parse(format!("appendix1 line {line}: expected 2 columns")));
            };
            Ok(FactoredRow {
                k: k.parse().map_err(|_| Error::parse(format!("appendix1 line {line}: bad k")))?,
                printed: printed.to_string(),
                primes: parse_factored(printed)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovJimmRow {
    pub m: BigUint,
    /// `γ_m` as printed.
    pub gamma: QuadraticSurd,
    /// `J(γ_m)` as printed.
    pub jimm: JimmValue,
}

fn int(s: &str, line: usize) -> Result<BigInt> {
    s.parse().map_err(|_| Error::parse(format!("appendix2 line {line}: bad integer {s:?}")))
}

/// The Jimm images of Markov irrationals. `J` entries are printed as
/// `(K·√(N/M) + O)/R`.
pub fn appendix2() -> Result<Vec<MarkovJimmRow>> {
    data_lines(APPENDIX2)
        .map(|(line, cols)| {
            if cols.len() != 6 && cols.len() != 10 {
                return Err(Error::parse(format!("appendix2 line {line}: expected 6 or 10 columns")));
            }
            let f = |i: usize| int(cols[i], line);
            let m = cols[0]
                .parse()
                .map_err(|_| Error::parse(format!("appendix2 line {line}: bad m")))?;
            let gamma = QuadraticSurd::new(f(1)?, f(2)?, f(3)?, f(4)?)?;
            let jimm = if cols.len() == 6 {
                if cols[5] != "inf" {
                    return Err(Error::parse(format!("appendix2 line {line}: expected inf")));
                }
                JimmValue::Infinity
            } else {
                let (k, n, mm, o, r) = (f(5)?, f(6)?, f(7)?, f(8)?, f(9)?);
                // K√(N/M) = K√(NM)/M.
                JimmValue::Surd(QuadraticSurd::new(&o * &mm, k, &n * &mm, &r * &mm)?)
            };
            Ok(MarkovJimmRow { m, gamma, jimm })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub m: u64,
    pub gamma: PeriodicCF,
    /// `None` for infinity.
    pub image: Option<PeriodicCF>,
}

/// `[1_a, 2_b, ...]` shorthand for runs of digits.
fn runs(parts: &[(u64, usize)]) -> Vec<u64> {
    parts.iter().flat_map(|&(d, n)| std::iter::repeat(d).take(n)).collect()
}

/// Expansions of `γ_m` and `J(γ_m)` for the first ten Markov numbers.
pub fn table1() -> Vec<Table1Row> {
    let w = |pre: Vec<u64>, per: Vec<u64>| PeriodicCF::new(pre, per).expect("valid table word");
    let row = |m, g: Vec<u64>, img: Vec<u64>| Table1Row {
        m,
        gamma: w(vec![], g),
        image: Some(w(vec![1], img)),
    };
    vec![
        Table1Row { m: 1, gamma: w(vec![], vec![1]), image: None },
        row(2, vec![2], vec![2]),
        row(5, runs(&[(2, 2), (1, 2)]), vec![2, 4]),
        row(13, runs(&[(2, 2), (1, 4)]), vec![2, 6]),
        row(29, runs(&[(2, 4), (1, 2)]), vec![2, 2, 2, 4]),
        row(34, runs(&[(2, 2), (1, 6)]), vec![2, 8]),
        row(89, runs(&[(2, 2), (1, 8)]), vec![2, 10]),
        row(169, runs(&[(2, 6), (1, 2)]), vec![2, 2, 2, 2, 2, 4]),
        row(194, runs(&[(2, 2), (1, 2), (2, 2), (1, 4)]), vec![2, 4, 2, 6]),
        row(233, runs(&[(2, 2), (1, 10)]), vec![2, 12]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse() {
        let a1 = appendix1().unwrap();
        assert_eq!(a1.len(), 200);
        assert_eq!(a1[0].primes, vec![2789, 59369]);
        assert_eq!(a1[18].printed, "3^4");
        let a2 = appendix2().unwrap();
        assert_eq!(a2.len(), 66);
        assert_eq!(a2[0].jimm, JimmValue::Infinity);
        assert_eq!(a2[1].jimm, JimmValue::Surd(QuadraticSurd::new(0, 1, 2, 1).unwrap()));
        assert_eq!(table1().len(), 10);
        assert_eq!(table1()[4].image.as_ref().unwrap().to_string(), "[1,(2,2,2,4)]");
    }
}
