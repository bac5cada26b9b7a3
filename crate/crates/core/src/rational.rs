//! Arbitrary-precision rational scalars.
//!
//! The engine never touches floating point: masses, inner products, Casimir
//! values and character averages are all `Rational`. The carrier is
//! `num_rational::BigRational`, which keeps values reduced with a positive
//! denominator. On the wire rationals are "p/q" strings ("p" when q = 1).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Parse a "p/q" (or plain "p") string, rejecting zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let trimmed = s.trim();
    if let Some((_, d)) = trimmed.split_once('/') {
        if d.trim().chars().all(|c| c == '0') && !d.trim().is_empty() {
            return Err(Error::InvalidInput(format!(
                "rational `{trimmed}` has zero denominator"
            )));
        }
    }
    Rational::from_str(trimmed)
        .map_err(|e| Error::InvalidInput(format!("cannot parse rational `{trimmed}`: {e}")))
}

/// The value as a nonnegative integer, if it is one.
pub fn as_nonneg_integer(r: &Rational) -> Option<u64> {
    if r.is_integer() && !r.is_negative() {
        r.numer().to_u64()
    } else {
        None
    }
}

pub fn is_zero(r: &Rational) -> bool {
    r.numer().is_zero()
}

/// serde adapter: a single `Rational` as a "p/q" string.
pub mod serde_rational {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Rational,
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s).map_err(de::Error::custom)
    }
}

/// serde adapter: a `Vec<Rational>` as a list of "p/q" strings.
pub mod serde_rational_vec {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        values: &[Rational],
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(values.iter().map(|v| v.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        strings
            .iter()
            .map(|s| parse_rational(s).map_err(de::Error::custom))
            .collect()
    }
}
