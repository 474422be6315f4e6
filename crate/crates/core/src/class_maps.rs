//! Slope maps of compatibility classes.
//!
//! A compatibility class `C` of surfaces meeting two boundary tori `T1`,
//! `T2` determines `Φ_C ∈ SL₂(Q)` sending the slope of each member surface on
//! `T2` to its slope on `T1`. Given two member surfaces `R`, `S` with
//! independent boundary classes, `Φ_C = Ψ1·Ψ2⁻¹` where `Ψi` has columns
//! `[R ∩ Ti]` and `[S ∩ Ti]`; boundary counting forces `det Ψ1 = det Ψ2`.
//!
//! Class maps are stored as JSON records:
//!
//! ```json
//! {"phi": [["0","1"],["-1","0"]], "type_pair": [3,3], "complexity_bound": 0,
//!  "provenance": "two-surface", "surfaces": [{"on_t1": ["1","0"], "on_t2": ["0","1"]}]}
//! ```
//!
//! Only `phi` is required; a bare record is an external map.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope_algebra::{basis_completion, PrimitiveClass, Slope, UnimodularQ};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    SingleSlope,
    TwoSurface,
    #[default]
    External,
}

/// Boundary homology classes of one surface on the two tori.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceBoundaryData {
    pub on_t1: PrimitiveClass,
    pub on_t2: PrimitiveClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawClassMap")]
pub struct ClassMap {
    pub phi: UnimodularQ,
    /// Curve types on `T1` and `T2`, when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type_pair: Option<(u8, u8)>,
    pub complexity_bound: u64,
    pub provenance: Provenance,
    /// The surfaces the map was built from.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub surfaces: Vec<SurfaceBoundaryData>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClassMap {
    phi: UnimodularQ,
    #[serde(default)]
    type_pair: Option<(u8, u8)>,
    #[serde(default)]
    complexity_bound: u64,
    #[serde(default)]
    provenance: Provenance,
    #[serde(default)]
    surfaces: Vec<SurfaceBoundaryData>,
}

impl TryFrom<RawClassMap> for ClassMap {
    type Error = Error;

    fn try_from(raw: RawClassMap) -> Result<Self> {
        let mut cm = ClassMap::external(raw.phi).with_complexity(raw.complexity_bound);
        if let Some((t1, t2)) = raw.type_pair {
            cm = cm.with_type_pair(t1, t2)?;
        }
        for s in &raw.surfaces {
            if cm.phi.lft_apply(&s.on_t2.slope()) != s.on_t1.slope() {
                return Err(Error::InvalidInput(format!(
                    "phi does not send {} to {}",
                    s.on_t2.slope(),
                    s.on_t1.slope()
                )));
            }
        }
        cm.provenance = raw.provenance;
        cm.surfaces = raw.surfaces;
        Ok(cm)
    }
}

impl ClassMap {
    pub fn external(phi: UnimodularQ) -> Self {
        ClassMap {
            phi,
            type_pair: None,
            complexity_bound: 0,
            provenance: Provenance::External,
            surfaces: Vec::new(),
        }
    }

    pub fn identity() -> Self {
        Self::external(UnimodularQ::identity())
    }

    pub fn with_type_pair(mut self, on_t1: u8, on_t2: u8) -> Result<Self> {
        for t in [on_t1, on_t2] {
            if !(1..=3).contains(&t) {
                return Err(Error::InvalidInput(format!("curve type {t} is not one of 1, 2, 3")));
            }
        }
        self.type_pair = Some((on_t1, on_t2));
        Ok(self)
    }

    pub fn with_complexity(mut self, bound: u64) -> Self {
        self.complexity_bound = bound;
        self
    }

    pub fn maps_slope(&self, on_t2: &Slope) -> Slope {
        self.phi.lft_apply(on_t2)
    }
}

fn det(u: &(BigInt, BigInt), v: &(BigInt, BigInt)) -> BigInt {
    &u.0 * &v.1 - &u.1 * &v.0
}

fn q(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// `Φ = Ψ1·Ψ2⁻¹` with `Ψi = (ri si)`, so that `Φ·r2 = r1` and `Φ·s2 = s1`.
pub fn build_from_two_surfaces(
    r1: &PrimitiveClass,
    s1: &PrimitiveClass,
    r2: &PrimitiveClass,
    s2: &PrimitiveClass,
) -> Result<ClassMap> {
    let (r1v, s1v, r2v, s2v) = (r1.vector(), s1.vector(), r2.vector(), s2.vector());
    let det1 = det(&r1v, &s1v);
    let det2 = det(&r2v, &s2v);
    if det2.is_zero() {
        return Err(Error::DegenerateClass);
    }
    if det1 != det2 {
        return Err(Error::ViolatesBoundaryCount { det1: det1.to_string(), det2: det2.to_string() });
    }
    // Ψ2⁻¹ = (1/det)·[[s2y, −s2x], [−r2y, r2x]]
    let d = q(&det2);
    let inv = [q(&s2v.1) / &d, -q(&s2v.0) / &d, -q(&r2v.1) / &d, q(&r2v.0) / &d];
    let psi1 = [q(&r1v.0), q(&s1v.0), q(&r1v.1), q(&s1v.1)];
    let phi = UnimodularQ::new(
        &psi1[0] * &inv[0] + &psi1[1] * &inv[2],
        &psi1[0] * &inv[1] + &psi1[1] * &inv[3],
        &psi1[2] * &inv[0] + &psi1[3] * &inv[2],
        &psi1[2] * &inv[1] + &psi1[3] * &inv[3],
    )
    .expect("equal nonzero determinants give determinant 1");
    Ok(ClassMap {
        phi,
        type_pair: None,
        complexity_bound: 0,
        provenance: Provenance::TwoSurface,
        surfaces: vec![
            SurfaceBoundaryData { on_t1: r1.clone(), on_t2: r2.clone() },
            SurfaceBoundaryData { on_t1: s1.clone(), on_t2: s2.clone() },
        ],
    })
}

/// The canonical integral map `B1·B2⁻¹` sending `tau2` to `tau1`, where `Bi`
/// is [`basis_completion`] of `taui`.
pub fn build_from_single_slope(tau1: &Slope, tau2: &Slope) -> ClassMap {
    let b1 = basis_completion(tau1);
    let b2 = basis_completion(tau2);
    let phi = b1.compose(&b2.invert()).to_q();
    let class = |s: &Slope| PrimitiveClass::new(s.p().clone(), s.q().clone(), BigUint::one()).expect("slope is primitive");
    ClassMap {
        phi,
        type_pair: None,
        complexity_bound: 0,
        provenance: Provenance::SingleSlope,
        surfaces: vec![SurfaceBoundaryData { on_t1: class(tau1), on_t2: class(tau2) }],
    }
}

/// Outcome of checking a third surface `Q` against a two-surface class map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThirdSurfaceCheck {
    /// `Φ·q2 = q1` as vectors.
    pub maps_q2_to_q1: bool,
    /// `det(q1, r1) = det(q2, r2)`, when `R` is retained.
    pub det_with_r: Option<bool>,
    /// `det(q1, s1) = det(q2, s2)`, when `S` is retained.
    pub det_with_s: Option<bool>,
}

impl ThirdSurfaceCheck {
    pub fn holds(&self) -> bool {
        self.maps_q2_to_q1 && self.det_with_r != Some(false) && self.det_with_s != Some(false)
    }
}

pub fn verify_third_surface(cm: &ClassMap, q1: &PrimitiveClass, q2: &PrimitiveClass) -> ThirdSurfaceCheck {
    let (q1v, q2v) = (q1.vector(), q2.vector());
    let image = cm.phi.apply_vector(&q(&q2v.0), &q(&q2v.1));
    let maps_q2_to_q1 = image == (q(&q1v.0), q(&q1v.1));
    let identity = |i: usize| {
        (cm.provenance == Provenance::TwoSurface && cm.surfaces.len() == 2).then(|| {
            let s = &cm.surfaces[i];
            det(&q1v, &s.on_t1.vector()) == det(&q2v, &s.on_t2.vector())
        })
    };
    ThirdSurfaceCheck { maps_q2_to_q1, det_with_r: identity(0), det_with_s: identity(1) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCountBound {
    #[serde(with = "crate::json::integer_string")]
    pub bound: BigInt,
    /// A triangulation has at least one tetrahedron.
    pub degenerate: bool,
}

/// `3²·3ᵗ`: typed compatibility classes of complexity zero over `t` tetrahedra.
pub fn class_count_bound(tetrahedra: u32) -> ClassCountBound {
    ClassCountBound {
        bound: BigInt::from(9u32) * BigInt::from(3u32).pow(tetrahedra),
        degenerate: tetrahedra == 0,
    }
}
