//! Exact rational scalars.
//!
//! Everything algebraic in this crate runs over [`Scalar`], an
//! arbitrary-precision rational kept in lowest terms with a positive
//! denominator. On the wire a scalar is a string: `"3"` or `"-1/2"`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> Scalar {
    frac(1, 2)
}

pub fn from_big(n: &BigInt) -> Scalar {
    Scalar::from_integer(n.clone())
}

/// Returns the integer value if `s` has denominator one.
pub fn to_integer(s: &Scalar) -> Result<BigInt> {
    if s.is_integer() {
        Ok(s.to_integer())
    } else {
        Err(Error::NotIntegral(s.clone()))
    }
}

pub fn format(s: &Scalar) -> String {
    s.to_string()
}

/// Parses `"p"` or `"p/q"`. The result is reduced; a zero denominator is rejected.
pub fn parse(text: &str) -> Result<Scalar> {
    let bad = || Error::ParseRational(text.to_string());
    let trimmed = text.trim();
    match trimmed.split_once('/') {
        None => BigInt::from_str(trimmed).map(Scalar::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
    }
}

/// Serde adapter writing a [`Scalar`] as its exact string form.
pub mod as_string {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Scalar, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Scalar, D::Error> {
        let text = String::deserialize(de)?;
        parse(&text).map_err(de::Error::custom)
    }
}

/// `n choose k` as a big integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Encodes a big integer as a JSON number when it fits in `i64`, else as a decimal string.
pub fn int_json(n: &BigInt) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("-2/4").unwrap(), frac(-1, 2));
        assert_eq!(parse("6/-4").unwrap(), frac(-3, 2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert_eq!(format(&frac(-1, 2)), "-1/2");
        assert_eq!(format(&int(3)), "3");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn canonical_form() {
        let s = parse("10/-15").unwrap();
        assert_eq!(s.numer(), &BigInt::from(-2));
        assert_eq!(s.denom(), &BigInt::from(3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(12, 6), BigInt::from(924));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
