//! Exact rational scalars: parsing, formatting and sign helpers.

use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Q = BigRational;

/// Builds the rational `n`.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Builds the rational `n / d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn qf(n: i64, d: i64) -> Q {
    assert!(d != 0, "zero denominator");
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn sign(x: &Q) -> i8 {
    match x.cmp(&Q::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// `(-1)^e` as a rational.
pub fn neg_one_pow(e: usize) -> Q {
    if e.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Integer power of a rational (`x^0 = 1`).
pub fn pow(x: &Q, e: usize) -> Q {
    let mut acc = Q::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Parses an exact rational literal: an integer (`-12`) or a fraction
/// (`3/4`, `-7/2`). Decimal points, exponents and anything else are
/// rejected so that inexact input can never slip into the exact pipeline.
pub fn parse_rational(token: &str) -> Result<Q> {
    let t = token.trim();
    let err = || Error::Parse {
        token: token.to_string(),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        s.parse::<BigInt>().map_err(|_| err())
    };
    match t.split_once('/') {
        None => Ok(Q::from_integer(parse_int(t)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            if d.starts_with(['-', '+']) {
                return Err(err());
            }
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Formats a rational as `n` or `n/d` in lowest terms.
pub fn format_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Lossy conversion to `f64`, used only by numeric cross-checks.
pub fn to_f64(x: &Q) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Extremely large magnitudes: fall back to a scaled ratio.
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        if x.is_negative() {
            -(n.abs() / d)
        } else {
            n / d
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("-12").unwrap(), q(-12));
        assert_eq!(parse_rational(" 3/4 ").unwrap(), qf(3, 4));
        assert_eq!(parse_rational("-6/4").unwrap(), qf(-3, 2));
        assert_eq!(parse_rational("+5").unwrap(), q(5));
    }

    #[test]
    fn rejects_floats_and_garbage() {
        for bad in ["1.5", "1e3", "", "/2", "1/0", "1/-2", "x", "--1", "0x10"] {
            assert!(parse_rational(bad).is_err(), "{bad} accepted");
        }
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format_rational(&qf(6, -4)), "-3/2");
        assert_eq!(format_rational(&q(7)), "7");
    }
}
