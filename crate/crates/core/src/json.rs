//! String-rational JSON encoding shared by every file format and the CLI.
//!
//! Rationals are written as `"p"` or `"p/q"`. On input, bare JSON integers
//! are also accepted; any JSON number with a fraction or exponent is rejected.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("malformed rational {s:?}, expected \"p\" or \"p/q\""));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub(crate) fn value_to_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(BigRational::from_integer(u.into()))
            } else {
                Err(Error::Parse(format!(
                    "floating-point number {n} rejected; write exact values as \"p/q\" strings"
                )))
            }
        }
        other => Err(Error::Parse(format!("expected a rational, found {other}"))),
    }
}

/// An integer accepted either as a JSON integer or as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerText(pub BigInt);

impl<'de> Deserialize<'de> for IntegerText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        let r = value_to_rational(&v).map_err(serde::de::Error::custom)?;
        if !r.denom().is_one() {
            return Err(serde::de::Error::custom(format!("expected an integer, found {}", format_rational(&r))));
        }
        Ok(IntegerText(r.numer().clone()))
    }
}

/// A rational accepted either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalText(pub BigRational);

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        value_to_rational(&v).map(RationalText).map_err(serde::de::Error::custom)
    }
}

impl Serialize for IntegerText {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

/// Serde adapter for a `BigRational` field stored as a string.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        RationalText::deserialize(d).map(|r| r.0)
    }
}

/// Serde adapter for a `BigInt` field stored as a string.
pub mod integer_string {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        IntegerText::deserialize(d).map(|n| n.0)
    }
}
