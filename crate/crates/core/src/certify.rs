//! Distance certificates for gluing maps.
//!
//! For a gluing `φ` and a class map `Φ_C`, the composite `φ·Φ_C` has
//! displacement zero exactly when it fixes a slope, i.e. when it has a
//! rational eigenslope. That dichotomy is decided exactly. Larger
//! displacements are only sampled: the empirical minimum over slopes of
//! bounded height is an upper bound on the true minimum, never a proof of
//! distance two.

use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::class_maps::ClassMap;
use crate::error::{Error, Result};
use crate::farey::{distance, slopes_up_to_height};
use crate::slope_algebra::{rational_eigenslopes, Slope, UnimodularQ, UnimodularZ};

pub const DEFAULT_SEARCH_BOUND: u64 = 100;

/// Environment variable overriding [`DEFAULT_SEARCH_BOUND`].
pub const SEARCH_BOUND_ENV: &str = "TORUS_GLUING_BOUND";

/// The default search bound, honouring [`SEARCH_BOUND_ENV`].
pub fn default_search_bound() -> Result<u64> {
    match std::env::var(SEARCH_BOUND_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&b| b > 0)
            .ok_or_else(|| Error::InvalidInput(format!("{SEARCH_BOUND_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_SEARCH_BOUND),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    RationalEigenslopeFound,
    EigenslopeSetEmpty,
    TraceBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDistanceResult {
    pub map: UnimodularQ,
    pub lower_bound: u8,
    pub fixed_slope_witness: Option<Slope>,
    pub criterion: Criterion,
    pub empirical_min_displacement: u64,
    pub empirical_witness: Slope,
    pub empirical_image: Slope,
    pub search_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassResult {
    pub class_map: ClassMap,
    pub result: MapDistanceResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceCertificate {
    pub gluing: UnimodularZ,
    pub search_bound: u64,
    pub per_class: Vec<ClassResult>,
    pub c_distance_lower_bound: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gluing {
    pub phi: UnimodularZ,
    pub classes: Vec<ClassMap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ordering {
    pub label: String,
    pub gluings: Vec<Gluing>,
}

/// Input of [`collection_distance`] as read from a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollectionSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search_bound: Option<u64>,
    pub orderings: Vec<Ordering>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingReport {
    pub label: String,
    pub certificates: Vec<DistanceCertificate>,
    pub min_lower_bound: u8,
    pub min_empirical_displacement: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceTwoStatus {
    /// Every ordering has a gluing with a sampled displacement of at most one.
    Refuted,
    /// Not decided by exact certification.
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollectionReport {
    pub search_bound: u64,
    pub orderings: Vec<OrderingReport>,
    pub best: u8,
    pub best_ordering: String,
    pub distance_two: DistanceTwoStatus,
}

/// `|trace| < 2/d` or `|trace| > 2d`, with `d` the denominator of `m`.
pub fn trace_criterion(m: &UnimodularQ) -> bool {
    let t = m.trace().abs();
    let d = BigRational::from_integer(m.denominator().into());
    let two = BigRational::from_integer(2.into());
    t < &two / &d || t > two * d
}

pub fn map_distance(m: &UnimodularQ, search_bound: u64) -> Result<MapDistanceResult> {
    if search_bound == 0 {
        return Err(Error::InvalidInput("search bound must be positive".into()));
    }
    let eigen = rational_eigenslopes(m);
    let (lower_bound, fixed_slope_witness, criterion) = match eigen.witness() {
        Some(w) => (0u8, Some(w), Criterion::RationalEigenslopeFound),
        None if trace_criterion(m) => (1, None, Criterion::TraceBound),
        None => (1, None, Criterion::EigenslopeSetEmpty),
    };
    let mut best: Option<(u64, Slope, Slope)> = None;
    for gamma in slopes_up_to_height(search_bound) {
        let image = m.lft_apply(&gamma);
        let d = distance(&gamma, &image);
        if best.as_ref().is_none_or(|b| d < b.0) {
            best = Some((d, gamma, image));
            if d <= u64::from(lower_bound) {
                break;
            }
        }
    }
    let (empirical_min_displacement, empirical_witness, empirical_image) = best.expect("search range is nonempty");
    Ok(MapDistanceResult {
        map: m.clone(),
        lower_bound,
        fixed_slope_witness,
        criterion,
        empirical_min_displacement,
        empirical_witness,
        empirical_image,
        search_bound,
    })
}

pub fn c_distance(phi: &UnimodularZ, classes: &[ClassMap], search_bound: u64) -> Result<DistanceCertificate> {
    if classes.is_empty() {
        return Err(Error::EmptyClassList);
    }
    let phi_q = phi.to_q();
    let per_class = classes
        .iter()
        .map(|cm| {
            Ok(ClassResult {
                class_map: cm.clone(),
                result: map_distance(&phi_q.compose(&cm.phi), search_bound)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let c_distance_lower_bound = per_class.iter().map(|c| c.result.lower_bound).min().expect("nonempty");
    Ok(DistanceCertificate { gluing: phi.clone(), search_bound, per_class, c_distance_lower_bound })
}

pub fn collection_distance(orderings: &[Ordering], search_bound: u64) -> Result<CollectionReport> {
    if orderings.is_empty() {
        return Err(Error::InvalidInput("no orderings given".into()));
    }
    let mut reports = Vec::new();
    for ordering in orderings {
        if ordering.gluings.is_empty() {
            return Err(Error::InvalidInput(format!("ordering {:?} has no gluings", ordering.label)));
        }
        let certificates = ordering
            .gluings
            .iter()
            .map(|g| c_distance(&g.phi, &g.classes, search_bound))
            .collect::<Result<Vec<_>>>()?;
        let min_lower_bound = certificates.iter().map(|c| c.c_distance_lower_bound).min().expect("nonempty");
        let min_empirical_displacement = certificates
            .iter()
            .flat_map(|c| c.per_class.iter().map(|r| r.result.empirical_min_displacement))
            .min()
            .expect("nonempty");
        reports.push(OrderingReport {
            label: ordering.label.clone(),
            certificates,
            min_lower_bound,
            min_empirical_displacement,
        });
    }
    let best_report = reports
        .iter()
        .reduce(|a, b| if b.min_lower_bound > a.min_lower_bound { b } else { a })
        .expect("nonempty");
    let distance_two = if reports.iter().all(|r| r.min_empirical_displacement <= 1) {
        DistanceTwoStatus::Refuted
    } else {
        DistanceTwoStatus::Unresolved
    };
    Ok(CollectionReport {
        search_bound,
        best: best_report.min_lower_bound,
        best_ordering: best_report.label.clone(),
        orderings: reports,
        distance_two,
    })
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

impl MapDistanceResult {
    /// Recomputes the result from `map` and `search_bound` and checks every field,
    /// then rechecks the witnesses directly.
    pub fn verify(&self) -> Result<()> {
        let fresh = map_distance(&self.map, self.search_bound)?;
        check(fresh == *self, || format!("recomputed result for {} differs", self.map))?;
        if let Some(w) = &self.fixed_slope_witness {
            check(self.map.lft_apply(w) == *w, || format!("{w} is not fixed by {}", self.map))?;
        }
        check(self.map.lft_apply(&self.empirical_witness) == self.empirical_image, || {
            format!("{} does not map {} to {}", self.map, self.empirical_witness, self.empirical_image)
        })?;
        check(
            distance(&self.empirical_witness, &self.empirical_image) == self.empirical_min_displacement,
            || "empirical displacement does not match its witness".into(),
        )?;
        check(self.empirical_min_displacement >= u64::from(self.lower_bound), || {
            "empirical displacement is below the lower bound".into()
        })
    }
}

impl DistanceCertificate {
    pub fn verify(&self) -> Result<()> {
        let phi = self.gluing.to_q();
        for c in &self.per_class {
            check(phi.compose(&c.class_map.phi) == c.result.map, || {
                format!("class result map is not the composite with {}", c.class_map.phi)
            })?;
            c.result.verify()?;
        }
        let classes: Vec<ClassMap> = self.per_class.iter().map(|c| c.class_map.clone()).collect();
        let fresh = c_distance(&self.gluing, &classes, self.search_bound)?;
        check(fresh == *self, || format!("recomputed certificate for {} differs", self.gluing))
    }

    pub fn is_certified(&self) -> bool {
        self.c_distance_lower_bound >= 1
    }
}

impl CollectionReport {
    pub fn verify(&self) -> Result<()> {
        let orderings: Vec<Ordering> = self
            .orderings
            .iter()
            .map(|o| Ordering {
                label: o.label.clone(),
                gluings: o
                    .certificates
                    .iter()
                    .map(|c| Gluing {
                        phi: c.gluing.clone(),
                        classes: c.per_class.iter().map(|r| r.class_map.clone()).collect(),
                    })
                    .collect(),
            })
            .collect();
        for o in &self.orderings {
            for c in &o.certificates {
                c.verify()?;
            }
        }
        let fresh = collection_distance(&orderings, self.search_bound)?;
        check(fresh == *self, || "recomputed collection report differs".into())
    }
}
