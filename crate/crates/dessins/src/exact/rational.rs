//! Arbitrary-precision rational scalars.
//!
//! Backed by `num_rational::BigRational`, which maintains the invariants
//! required here: always reduced, denominator positive, zero as `0/1`.
//! Text form is `p/q` with the `/q` part omitted for integers; parsing and
//! formatting are pinned locally so the emitted grammar cannot drift with
//! the backing crate.

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `numer/denom` as an exact rational.
///
/// # Panics
/// Panics if `denom == 0`.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A whole number as an exact rational.
pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |message: String| Error::Parse { line: 1, message };
    let parse_int = |piece: &str| -> Result<BigInt> {
        piece
            .parse::<BigInt>()
            .map_err(|_| bad(format!("expected an integer, found {piece:?}")))
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((numer, denom)) => {
            let numer = parse_int(numer.trim())?;
            let denom = parse_int(denom.trim())?;
            if denom == BigInt::from(0) {
                return Err(bad("zero denominator".into()));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Formats as `p/q`, or just `p` when the value is an integer.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_reduces_and_normalizes_sign() {
        let r = rational(2, -4);
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rational(0, 5), integer(0));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "7", "-3", "1/2", "-5/3"] {
            let value = parse_rational(text).unwrap();
            assert_eq!(format_rational(&value), text);
        }
        assert_eq!(parse_rational("2/4").unwrap(), rational(1, 2));
        assert_eq!(parse_rational(" 3 / -6 ").unwrap(), rational(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }
}
