use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of Q ∪ {∞}, stored as a coprime pair `p/q`.
///
/// The canonical form has `q > 0`, except for ∞ which is stored as `1/0`.
/// Equality and hashing operate on the canonical form. Slopes are ordered
/// by value with ∞ greater than every rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

/// Canonical coprime representative of the slope spanned by `(p, q)`.
pub fn slope_normalize(p: BigInt, q: BigInt) -> Result<Slope> {
    Slope::new(p, q)
}

impl Slope {
    pub fn new(p: BigInt, q: BigInt) -> Result<Self> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroVector);
        }
        if q.is_zero() {
            return Ok(Self::infinity());
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    /// Shorthand for small literal slopes. Panics on `(0, 0)`.
    pub fn from_i64(p: i64, q: i64) -> Self {
        Self::new(p.into(), q.into()).expect("(0, 0) is not a slope")
    }

    pub fn infinity() -> Self {
        Slope { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn integer(n: BigInt) -> Self {
        Slope { p: n, q: BigInt::one() }
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.q.is_one()
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `max(|p|, |q|)`.
    pub fn height(&self) -> BigInt {
        self.p.abs().max(self.q.clone())
    }

    pub fn vector(&self) -> (BigInt, BigInt) {
        (self.p.clone(), self.q.clone())
    }
}

/// Geometric intersection number `|p·q' − q·p'|` of two slopes on the torus.
pub fn intersection_number(s: &Slope, t: &Slope) -> BigUint {
    (&s.p * &t.q - &s.q * &t.p).magnitude().clone()
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            // both denominators are positive
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |part: &str| {
            BigInt::from_str(part.trim())
                .map_err(|_| Error::Parse(format!("malformed slope {s:?}, expected \"p/q\"")))
        };
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (parse(p)?, parse(q)?),
            None => (parse(s)?, BigInt::one()),
        };
        Slope::new(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A homology class `multiplicity · (p, q)` with `(p, q)` primitive.
///
/// Unlike [`Slope`], the sign of `(p, q)` is kept: it is an oriented class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimitiveClass {
    p: BigInt,
    q: BigInt,
    multiplicity: BigUint,
}

impl PrimitiveClass {
    pub fn new(p: BigInt, q: BigInt, multiplicity: BigUint) -> Result<Self> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroVector);
        }
        if multiplicity.is_zero() {
            return Err(Error::InvalidInput("class multiplicity must be at least 1".into()));
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::InvalidInput(format!("({p}, {q}) is not primitive")));
        }
        Ok(PrimitiveClass { p, q, multiplicity })
    }

    /// Splits an integer vector into its primitive direction and multiplicity.
    pub fn from_vector(x: BigInt, y: BigInt) -> Result<Self> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = x.gcd(&y);
        Ok(PrimitiveClass {
            p: x / &g,
            q: y / &g,
            multiplicity: g.magnitude().clone(),
        })
    }

    pub fn from_i64(x: i64, y: i64) -> Result<Self> {
        Self::from_vector(x.into(), y.into())
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn multiplicity(&self) -> &BigUint {
        &self.multiplicity
    }

    /// The full integer vector `multiplicity · (p, q)`.
    pub fn vector(&self) -> (BigInt, BigInt) {
        let m = BigInt::from(self.multiplicity.clone());
        (&self.p * &m, &self.q * &m)
    }

    pub fn slope(&self) -> Slope {
        Slope::new(self.p.clone(), self.q.clone()).expect("primitive class is nonzero")
    }
}

impl fmt::Display for PrimitiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.vector();
        write!(f, "{x},{y}")
    }
}

impl FromStr for PrimitiveClass {
    type Err = Error;

    /// Parses `"x,y"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed class {s:?}, expected \"x,y\""));
        let (x, y) = s.trim().split_once(',').ok_or_else(bad)?;
        let x = BigInt::from_str(x.trim()).map_err(|_| bad())?;
        let y = BigInt::from_str(y.trim()).map_err(|_| bad())?;
        Self::from_vector(x, y)
    }
}

impl Serialize for PrimitiveClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (x, y) = self.vector();
        [x.to_string(), y.to_string()].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PrimitiveClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[crate::json::IntegerText; 2]>::deserialize(deserializer)?;
        Self::from_vector(x.0, y.0).map_err(serde::de::Error::custom)
    }
}
