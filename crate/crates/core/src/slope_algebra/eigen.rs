use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::UnimodularQ;
use super::slope::Slope;

/// The rational eigenslopes of a matrix in SL₂(Q).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Eigenslopes {
    /// `M = ±I`: every slope is fixed.
    All,
    /// Zero, one or two slopes, sorted ascending.
    Finite(Vec<Slope>),
}

impl Eigenslopes {
    pub fn is_empty(&self) -> bool {
        matches!(self, Eigenslopes::Finite(v) if v.is_empty())
    }

    pub fn contains(&self, s: &Slope) -> bool {
        match self {
            Eigenslopes::All => true,
            Eigenslopes::Finite(v) => v.contains(s),
        }
    }

    /// The least fixed slope; `0/1` stands in for `All`.
    pub fn witness(&self) -> Option<Slope> {
        match self {
            Eigenslopes::All => Some(Slope::from_i64(0, 1)),
            Eigenslopes::Finite(v) => v.first().cloned(),
        }
    }
}

/// Exact square root of a rational, if it is the square of a rational.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// Slopes `r` with `M·(r, 1)ᵀ ∥ (r, 1)ᵀ` (or `(1, 0)ᵀ` for ∞).
///
/// A finite root solves `c·r² + (d − a)·r − b = 0`; ∞ is an eigenslope iff
/// `c = 0`. The discriminant `(d − a)² + 4bc` equals `trace² − 4`.
pub fn rational_eigenslopes(m: &UnimodularQ) -> Eigenslopes {
    if m.is_plus_minus_identity() {
        return Eigenslopes::All;
    }
    let [a, b, c, d] = m.entries();
    let mut out = Vec::new();
    if c.is_zero() {
        out.push(Slope::infinity());
        let lin = d - a;
        if !lin.is_zero() {
            out.push(rational_slope(&(b / &lin)));
        }
    } else {
        let lin = d - a;
        let disc = &lin * &lin + BigRational::from_integer(4.into()) * b * c;
        if let Some(root) = rational_sqrt(&disc) {
            let two_c = c * BigRational::from_integer(2.into());
            let minus_lin = -lin;
            out.push(rational_slope(&((&minus_lin + &root) / &two_c)));
            if !root.is_zero() {
                out.push(rational_slope(&((&minus_lin - &root) / &two_c)));
            }
        }
    }
    out.sort();
    out.dedup();
    Eigenslopes::Finite(out)
}

fn rational_slope(r: &BigRational) -> Slope {
    Slope::new(r.numer().clone(), r.denom().clone()).expect("denominator is nonzero")
}

/// Is `s` fixed by the action of `m`? Evaluates the quadratic form directly.
pub fn fixes(m: &UnimodularQ, s: &Slope) -> bool {
    let [a, b, c, d] = m.entries();
    let p = BigRational::from_integer(s.p().clone());
    let q = BigRational::from_integer(s.q().clone());
    let form: BigRational = c * &p * &p + (d - a) * &p * &q - b * &q * &q;
    form.is_zero()
}
