use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Exact fraction of big integers, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[cfg(test)]
pub(crate) fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(crate) fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::parse(format!("invalid numerator in {s:?}")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::parse(format!("invalid denominator in {s:?}")))?;
    if d.sign() == num_bigint::Sign::NoSign {
        return Err(Error::parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("41/19").unwrap(), rat(41, 19));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert!(matches!(parse_rational("1/0"), Err(Error::Parse(_))));
        assert!(matches!(parse_rational("x/2"), Err(Error::Parse(_))));
    }

    #[test]
    fn display_matches_text_format() {
        assert_eq!(rat(112, 81).to_string(), "112/81");
        assert_eq!(rat(8, 2).to_string(), "4");
    }
}
