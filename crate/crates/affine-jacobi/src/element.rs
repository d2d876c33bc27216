//! Affine Jacobi polynomials `Ĵ_λ̂`, solved order by order in `p`.

use std::collections::BTreeMap;

use exact_algebra::RatFunc;
use jacobi_classical::{mk_eigenvalue, KParam};
use num_rational::Rational64;
use root_data::{RootData, Weight};
use serde::{Deserialize, Serialize};

use crate::operator::{apply_unchecked, shifted_level};
use crate::orbit::{
    affine_orbitsum, check_level_dominant, from_orbit_coefficients, orbit_coefficients,
};
use crate::series::SeriesJson;
use crate::{AffineError, AffineSeries};

/// `Ĵ_λ̂ = Σ c_{μ,d} p^d m_{μ + KΛ₀}` for `λ̂ = λ + KΛ₀ + nδ`, through
/// `p`-order `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ElementJson", into = "ElementJson")]
pub struct AffineJacobiElement {
    pub lambda: Weight,
    /// The coefficient `n` of `δ` in `λ̂`.
    pub delta: i64,
    pub k: KParam,
    /// Coefficients on `p^d m_{μ + KΛ₀}`, `μ ∈ P⁺_K`.
    pub coeffs: BTreeMap<(Weight, i64), RatFunc>,
    /// The expansion in `e^μ p^d`.
    pub series: AffineSeries,
}

impl AffineJacobiElement {
    pub fn level(&self) -> i64 {
        self.series.level()
    }

    pub fn order(&self) -> i64 {
        self.series.order()
    }

    /// `(λ̂, λ̂ + 2kρ̂) = (λ, λ + 2kρ) + 2n(K + k h∨)`.
    pub fn eigenvalue(&self, rd: &RootData) -> RatFunc {
        mk_eigenvalue(rd, &self.lambda, self.k)
            .add(&shifted_level(rd, self.level(), self.k).scale_int(2 * self.delta))
    }

    /// `Ĵ_{λ̂ + nδ} = p^{−n} Ĵ_λ̂`.
    pub fn shift_delta(&self, n: i64) -> AffineJacobiElement {
        AffineJacobiElement {
            lambda: self.lambda.clone(),
            delta: self.delta + n,
            k: self.k,
            coeffs: self
                .coeffs
                .iter()
                .map(|((mu, d), c)| ((mu.clone(), d - n), c.clone()))
                .collect(),
            series: self.series.shift_p(-n),
        }
    }
}

fn check_k(rd: &RootData, level: i64, k: KParam) -> Result<(), AffineError> {
    if let KParam::Value(v) = k {
        if v < Rational64::from_integer(0) {
            return Err(AffineError::Domain(format!(
                "affine Jacobi polynomials need k >= 0, got {v}"
            )));
        }
    }
    if shifted_level(rd, level, k).is_zero() {
        return Err(AffineError::Critical {
            level,
            k: k.to_string(),
        });
    }
    Ok(())
}

/// Solve `M̂_k Ĵ = (λ̂, λ̂ + 2kρ̂) Ĵ` for `λ̂ = λ + KΛ₀` through `p`-order
/// `order`.
///
/// The unknowns are `c_{μ,d}` for `μ ∈ P⁺_K` and `μ̂ − dδ ≤ λ̂`, taken in
/// order of increasing `d` and decreasing height. Each gap
/// `(λ, λ + 2kρ) − (μ, μ + 2kρ) + 2d(K + k h∨)` is checked to be nonzero,
/// and positive when `k` is a number.
pub fn affine_jacobi(
    rd: &RootData,
    lam: &Weight,
    level: i64,
    k: KParam,
    order: i64,
) -> Result<AffineJacobiElement, AffineError> {
    check_level_dominant(rd, lam, level)?;
    check_k(rd, level, k)?;
    if order < 0 {
        return Err(AffineError::Domain(format!(
            "truncation order {order} is negative"
        )));
    }
    let theta = rd.theta();
    let class: Vec<Weight> = rd
        .dominant_of_level(level)
        .into_iter()
        .filter(|mu| (lam - mu).in_root_lattice())
        .collect();
    let mut unknowns: Vec<(Weight, i64)> = Vec::new();
    for d in 0..=order {
        for mu in &class {
            if (mu - &theta.scale(d)).dominated_by(lam) {
                unknowns.push((mu.clone(), d));
            }
        }
    }
    unknowns.sort_by(|a, b| {
        a.1.cmp(&b.1)
            .then_with(|| b.0.pair_scaled(rd.rho()).cmp(&a.0.pair_scaled(rd.rho())))
            .then_with(|| b.0.cmp(&a.0))
    });
    debug_assert_eq!(unknowns.first(), Some(&(lam.clone(), 0)));

    let mut images: BTreeMap<Weight, BTreeMap<(Weight, i64), RatFunc>> = BTreeMap::new();
    for mu in &class {
        let m = affine_orbitsum(rd, mu, level, order)?;
        let image = orbit_coefficients(rd, &apply_unchecked(rd, &m, k));
        let diag = image
            .get(&(mu.clone(), 0))
            .cloned()
            .unwrap_or_else(RatFunc::zero);
        if diag != mk_eigenvalue(rd, mu, k) {
            return Err(AffineError::Internal(format!(
                "diagonal of M̂ at {mu} differs from its eigenvalue"
            )));
        }
        images.insert(mu.clone(), image);
    }

    let shift = shifted_level(rd, level, k).scale_int(2);
    let eigen = mk_eigenvalue(rd, lam, k);
    let mut solved: Vec<((Weight, i64), RatFunc)> = Vec::with_capacity(unknowns.len());
    for (j, (mu, d)) in unknowns.iter().enumerate() {
        if j == 0 {
            solved.push(((mu.clone(), *d), RatFunc::one()));
            continue;
        }
        let mut rhs = RatFunc::zero();
        for ((nu, e), c) in &solved {
            if e > d || c.is_zero() {
                continue;
            }
            if let Some(a) = images[nu].get(&(mu.clone(), d - e)) {
                rhs = rhs.add(&c.mul(a));
            }
        }
        let gap = eigen
            .sub(&mk_eigenvalue(rd, mu, k))
            .add(&shift.scale_int(*d));
        check_gap(&gap, lam, mu, *d)?;
        solved.push(((mu.clone(), *d), rhs.div(&gap)?));
    }
    let coeffs: BTreeMap<(Weight, i64), RatFunc> =
        solved.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let series = from_orbit_coefficients(rd, level, order, &coeffs);
    Ok(AffineJacobiElement {
        lambda: lam.clone(),
        delta: 0,
        k,
        coeffs,
        series,
    })
}

fn check_gap(gap: &RatFunc, lam: &Weight, mu: &Weight, d: i64) -> Result<(), AffineError> {
    let partner = || format!("{mu} at p^{d}");
    if gap.is_zero() {
        return Err(AffineError::Degenerate {
            lambda: lam.to_string(),
            mu: partner(),
        });
    }
    if let Some((a, b)) = gap.as_rational() {
        if (a.sign() == num_bigint::Sign::Minus) != (b.sign() == num_bigint::Sign::Minus) {
            return Err(AffineError::Internal(format!(
                "eigenvalue gap {gap} between {lam} and {} is negative",
                partner()
            )));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    lambda: Weight,
    delta: i64,
    k: KParam,
    #[serde(flatten)]
    series: SeriesJson,
}

impl From<AffineJacobiElement> for ElementJson {
    fn from(e: AffineJacobiElement) -> Self {
        ElementJson {
            lambda: e.lambda,
            delta: e.delta,
            k: e.k,
            series: e.series.into(),
        }
    }
}

impl TryFrom<ElementJson> for AffineJacobiElement {
    type Error = AffineError;

    fn try_from(js: ElementJson) -> Result<Self, Self::Error> {
        let series = AffineSeries::try_from(js.series)?;
        let rd = RootData::build_a_type(series.n())?;
        let coeffs = orbit_coefficients(&rd, &series);
        Ok(AffineJacobiElement {
            lambda: js.lambda,
            delta: js.delta,
            k: js.k,
            coeffs,
            series,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_zero_is_orbit_sum() {
        let rd = RootData::build_a_type(2).unwrap();
        for lam in rd.dominant_of_level(2) {
            let j = affine_jacobi(&rd, &lam, 2, KParam::integer(0), 4).unwrap();
            assert_eq!(j.series, affine_orbitsum(&rd, &lam, 2, 4).unwrap());
        }
    }

    #[test]
    fn json_round_trip() {
        let rd = RootData::build_a_type(2).unwrap();
        let j = affine_jacobi(&rd, &Weight::zero(2), 1, KParam::integer(2), 3).unwrap();
        let js = serde_json::to_value(&j).unwrap();
        assert_eq!(js["K"], 1);
        assert_eq!(js["k"], "2");
        assert_eq!(js["N"], 3);
        let back: AffineJacobiElement = serde_json::from_value(js).unwrap();
        assert_eq!(back, j);
    }
}
