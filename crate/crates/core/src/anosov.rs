//! Powers of a hyperbolic gluing that avoid every fixed slope.
//!
//! For hyperbolic `σ ∈ SL₂(Z)` and `K = ψ·Φ_C`, the traces `t_n = trace(σⁿK)`
//! satisfy `t_{n+1} = trace(σ)·t_n − t_{n−1}`. A matrix `L ∈ SL₂(Q)` with
//! `|trace L| < 2/d(L)` or `|trace L| > 2·d(L)` has no rational eigenslope.
//! Since `σ` is integral, `d(σⁿK)` divides `d(K)`, and once
//! `|t_{m+1}| ≥ |t_m|` and `|t_{m+1}| > 2·d(K)` the traces grow without bound:
//! `|t_{m+2}| ≥ (|trace σ| − 1)·|t_{m+1}|`. If instead two consecutive traces
//! vanish, all later ones do. Either event ends the search with a finite
//! certificate for every later power.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::certify::trace_criterion;
use crate::class_maps::ClassMap;
use crate::error::{Error, Result};
use crate::json::{IntegerText, RationalText};
use crate::slope_algebra::{rational_eigenslopes, UnimodularQ, UnimodularZ};

pub fn is_hyperbolic(sigma: &UnimodularZ) -> bool {
    sigma.trace().abs() > BigInt::from(2)
}

/// `trace(σⁿK)` for `n = 0..=n_max`.
pub fn trace_sequence(sigma: &UnimodularZ, k: &UnimodularQ, n_max: u64) -> Vec<BigRational> {
    let tr = BigRational::from_integer(sigma.trace());
    let mut out = vec![k.trace()];
    if n_max >= 1 {
        out.push(sigma.to_q().compose(k).trace());
    }
    for n in 2..=n_max as usize {
        let next = &tr * &out[n - 1] - &out[n - 2];
        out.push(next);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TailKind {
    /// `|t_{n₀+1}| ≥ |t_{n₀}|` and `|t_{n₀+1}| > 2·d(K)`.
    Growth,
    /// `t_{n₀} = t_{n₀+1} = 0`.
    Zero,
}

/// The criterion at one power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRecord {
    pub n: u64,
    pub trace: RationalText,
    pub denominator: IntegerText,
    pub criterion_passed: bool,
    pub eigenslopes_empty: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPowerBound {
    pub class_map: ClassMap,
    /// `ψ·Φ_C`.
    pub k: UnimodularQ,
    pub n_c: u64,
    pub tail_kind: TailKind,
    pub tail_index: u64,
    pub tail_traces: [RationalText; 2],
    pub d_k: IntegerText,
    /// Records for `n = 0..=tail_index + 1`.
    pub prefix_diagnostics: Vec<PowerRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerBoundReport {
    pub sigma: UnimodularZ,
    pub psi: UnimodularZ,
    pub per_class: Vec<ClassPowerBound>,
    pub overall_n: u64,
}

fn record(n: u64, m: &UnimodularQ) -> PowerRecord {
    PowerRecord {
        n,
        trace: RationalText(m.trace()),
        denominator: IntegerText(m.denominator().into()),
        criterion_passed: trace_criterion(m),
        eigenslopes_empty: rational_eigenslopes(m).is_empty(),
    }
}

/// The criterion for `σⁿK`, computed from the matrix power directly.
pub fn criterion_at(sigma: &UnimodularZ, k: &UnimodularQ, n: u64) -> PowerRecord {
    record(n, &sigma.pow(n).to_q().compose(k))
}

fn class_bound(sigma: &UnimodularZ, psi: &UnimodularZ, cm: &ClassMap) -> ClassPowerBound {
    let k = psi.to_q().compose(&cm.phi);
    let sigma_q = sigma.to_q();
    let d_k = BigRational::from_integer(k.denominator().into());
    let two_d = &d_k * BigRational::from_integer(2.into());
    let mut powers = vec![k.clone(), sigma_q.compose(&k)];
    let mut n = 0usize;
    let tail_kind = loop {
        let (t0, t1) = (powers[n].trace(), powers[n + 1].trace());
        if t0.is_zero() && t1.is_zero() {
            break TailKind::Zero;
        }
        if t1.abs() >= t0.abs() && t1.abs() > two_d {
            break TailKind::Growth;
        }
        let next = sigma_q.compose(&powers[n + 1]);
        powers.push(next);
        n += 1;
    };
    let prefix_diagnostics: Vec<PowerRecord> =
        powers.iter().enumerate().map(|(i, m)| record(i as u64, m)).collect();
    let n_c = prefix_diagnostics[..=n]
        .iter()
        .rev()
        .find(|r| !r.criterion_passed)
        .map_or(0, |r| r.n + 1);
    ClassPowerBound {
        class_map: cm.clone(),
        tail_traces: [RationalText(powers[n].trace()), RationalText(powers[n + 1].trace())],
        k,
        n_c,
        tail_kind,
        tail_index: n as u64,
        d_k: IntegerText(d_k.to_integer()),
        prefix_diagnostics,
    }
}

/// The least `N` with `σⁿψΦ_C` passing the trace criterion for every class
/// and every `n ≥ N`.
pub fn power_bound(sigma: &UnimodularZ, psi: &UnimodularZ, classes: &[ClassMap]) -> Result<PowerBoundReport> {
    if !is_hyperbolic(sigma) {
        return Err(Error::NotHyperbolic { trace: sigma.trace().to_string() });
    }
    if classes.is_empty() {
        return Err(Error::EmptyClassList);
    }
    let per_class: Vec<ClassPowerBound> = classes.iter().map(|cm| class_bound(sigma, psi, cm)).collect();
    let overall_n = per_class.iter().map(|c| c.n_c).max().expect("nonempty");
    Ok(PowerBoundReport { sigma: sigma.clone(), psi: psi.clone(), per_class, overall_n })
}

impl PowerBoundReport {
    /// Recomputes the report and checks each tail certificate against
    /// directly computed matrix powers.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(msg));
        let classes: Vec<ClassMap> = self.per_class.iter().map(|c| c.class_map.clone()).collect();
        let fresh = power_bound(&self.sigma, &self.psi, &classes)?;
        if fresh != *self {
            return fail("recomputed power bound report differs".into());
        }
        for c in &self.per_class {
            let n0 = c.tail_index;
            let at = criterion_at(&self.sigma, &c.k, n0);
            let next = criterion_at(&self.sigma, &c.k, n0 + 1);
            let (t0, t1) = (at.trace.0, next.trace.0);
            let holds = match c.tail_kind {
                TailKind::Growth => {
                    t1.abs() >= t0.abs() && t1.abs() > BigRational::from_integer(&c.d_k.0 * 2)
                }
                TailKind::Zero => t0.is_zero() && t1.is_zero(),
            };
            if !holds {
                return fail(format!("tail certificate at n = {n0} does not hold"));
            }
            if c.n_c > 0 && criterion_at(&self.sigma, &c.k, c.n_c - 1).criterion_passed {
                return fail(format!("n = {} already passes, so N = {} is not least", c.n_c - 1, c.n_c));
            }
        }
        Ok(())
    }
}
