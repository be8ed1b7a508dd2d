use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};

use super::{Scalar, ScalarMode};
use crate::error::Error;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rational_from_int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Parse `p`, `p/q` or a signed variant thereof.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse("empty rational literal"));
    }
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| Error::parse(format!("bad integer `{num_text}`")))?;
    let denom: BigInt = den_text
        .parse()
        .map_err(|_| Error::parse(format!("bad integer `{den_text}`")))?;
    if denom.is_zero() {
        return Err(Error::parse(format!("zero denominator in `{trimmed}`")));
    }
    Ok(Rational::new(numer, denom))
}

impl Scalar for Rational {
    const MODE: ScalarMode = ScalarMode::Rational;

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn sign(&self) -> i8 {
        match self.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    fn components(&self) -> (Rational, Rational) {
        (self.clone(), Rational::zero())
    }

    fn sqrt2() -> Option<Self> {
        None
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse(text: &str) -> Result<Self, Error> {
        parse_rational(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        let q = parse_rational("-6/8").unwrap();
        assert_eq!(q, Rational::new((-3).into(), 4.into()));
        assert_eq!(q.to_string(), "-3/4");
        assert_eq!(parse_rational("5").unwrap().to_string(), "5");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn sign_tracks_numerator() {
        assert_eq!(parse_rational("-2/7").unwrap().sign(), -1);
        assert_eq!(Rational::zero().sign(), 0);
        assert_eq!(parse_rational("9/2").unwrap().sign(), 1);
    }
}
