//! `J_λ` as the unitriangular eigenvector of `M_k`.

use std::collections::BTreeMap;

use exact_algebra::weyl::orbitsum;
use exact_algebra::{LatticePoly, RatFunc};
use macdonald_core::{macdonald_poly, Mode, Partition};
use root_data::{RootData, Weight};
use serde::{Deserialize, Serialize};

use crate::operator::{apply_unchecked, mk_eigenvalue};
use crate::{JacobiError, KParam};

/// `J_λ = Σ_{μ ≤ λ} c_{λμ} m_μ` with `c_{λλ} = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ElementJson", into = "ElementJson")]
pub struct JacobiElement {
    pub lambda: Weight,
    pub k: KParam,
    pub coeffs: BTreeMap<Weight, RatFunc>,
}

impl JacobiElement {
    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// Coefficient of `m_μ`.
    pub fn coeff(&self, mu: &Weight) -> RatFunc {
        self.coeffs.get(mu).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// `Σ c_μ m_μ` in the weight-lattice group algebra.
    pub fn to_lattice(&self, rd: &RootData) -> LatticePoly<RatFunc> {
        LatticePoly::from_orbit_coefficients(rd, &self.coeffs)
    }

    /// Substitute a value for a formal `k`.
    pub fn specialize(&self, k: KParam) -> Result<JacobiElement, JacobiError> {
        if self.k != KParam::Formal {
            return Err(JacobiError::Domain(format!(
                "k is already fixed to {}",
                self.k
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(mu, c)| Ok((mu.clone(), k.specialize(c)?)))
            .collect::<Result<BTreeMap<_, _>, JacobiError>>()?
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(JacobiElement {
            lambda: self.lambda.clone(),
            k,
            coeffs,
        })
    }
}

/// Solve `M_k J_λ = (λ, λ + 2kρ) J_λ` over the dominant weights `μ ≤ λ`.
pub fn jacobi_poly(rd: &RootData, lam: &Weight, k: KParam) -> Result<JacobiElement, JacobiError> {
    rd.check_dominant_integral(lam)?;
    let basis = rd.dominant_below(lam)?;
    let images = basis
        .iter()
        .map(|mu| {
            let m: LatticePoly<RatFunc> = orbitsum(rd, mu)?;
            Ok(apply_unchecked(rd, &m, k).orbit_coefficients()?)
        })
        .collect::<Result<Vec<_>, JacobiError>>()?;
    let eigen = mk_eigenvalue(rd, lam, k);
    let mut coeffs: Vec<RatFunc> = Vec::with_capacity(basis.len());
    for (j, nu) in basis.iter().enumerate() {
        if j == 0 {
            coeffs.push(RatFunc::one());
            continue;
        }
        let mut rhs = RatFunc::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if let Some(a) = images[i].get(nu) {
                rhs = rhs.add(&c.mul(a));
            }
        }
        let gap = eigen.sub(&mk_eigenvalue(rd, nu, k));
        if gap.is_zero() {
            return Err(JacobiError::Degenerate {
                lambda: lam.to_string(),
                mu: nu.to_string(),
            });
        }
        coeffs.push(rhs.div(&gap)?);
    }
    Ok(JacobiElement {
        lambda: lam.clone(),
        k,
        coeffs: basis
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    })
}

/// The coefficientwise limit `q → 1` of `P_λ(q, q^k)`, checked against
/// [`jacobi_poly`] at the same `k`.
pub fn macdonald_to_jack_limit(
    rd: &RootData,
    lam: &Partition,
    k: i64,
) -> Result<JacobiElement, JacobiError> {
    if k < 0 {
        return Err(JacobiError::Domain(format!(
            "the limit needs k >= 0, got {k}"
        )));
    }
    let p = macdonald_poly(rd, lam, Mode::TEqQk(k))?;
    let mut coeffs = BTreeMap::new();
    for (mu, c) in &p.coeffs {
        let limit = c
            .limit_q_to_one()
            .map_err(|e| JacobiError::Limit(format!("coefficient of m{mu}: {e}")))?;
        if !limit.is_zero() {
            coeffs.insert(mu.weight(), limit);
        }
    }
    let limit = JacobiElement {
        lambda: lam.weight(),
        k: KParam::integer(k),
        coeffs,
    };
    let direct = jacobi_poly(rd, &lam.weight(), KParam::integer(k))?;
    if direct != limit {
        return Err(JacobiError::Internal(format!(
            "q -> 1 limit of P{lam} differs from J at k = {k}"
        )));
    }
    Ok(limit)
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    mu: Weight,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    lambda: Weight,
    k: KParam,
    coeffs: Vec<CoeffJson>,
}

impl From<JacobiElement> for ElementJson {
    fn from(e: JacobiElement) -> Self {
        ElementJson {
            n: e.n(),
            coeffs: e
                .coeffs
                .iter()
                .rev()
                .map(|(mu, c)| CoeffJson {
                    mu: mu.clone(),
                    num: c.num_string(),
                    den: c.den_string(),
                })
                .collect(),
            lambda: e.lambda,
            k: e.k,
        }
    }
}

impl TryFrom<ElementJson> for JacobiElement {
    type Error = JacobiError;

    fn try_from(js: ElementJson) -> Result<Self, Self::Error> {
        if js.lambda.n() != js.n {
            return Err(JacobiError::Domain("lambda has the wrong rank".into()));
        }
        let mut coeffs = BTreeMap::new();
        for c in js.coeffs {
            coeffs.insert(c.mu, RatFunc::from_num_den_strings(&c.num, &c.den)?);
        }
        Ok(JacobiElement {
            lambda: js.lambda,
            k: js.k,
            coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_second_power() {
        // J_{2ω} = m_{2ω} + 2k/(k+1) m_0
        let rd = RootData::build_a_type(2).unwrap();
        let alpha = rd.positive_roots()[0].clone();
        let j = jacobi_poly(&rd, &alpha, KParam::Formal).unwrap();
        let expect: RatFunc = "(2*k)/(1 + k)".parse().unwrap();
        assert_eq!(j.coeff(&Weight::zero(2)), expect);
        assert!(j.coeff(&alpha).is_one());
    }

    #[test]
    fn collision_is_reported() {
        let rd = RootData::build_a_type(2).unwrap();
        let alpha = rd.positive_roots()[0].clone();
        let err = jacobi_poly(&rd, &alpha, KParam::integer(-1)).unwrap_err();
        assert!(matches!(err, JacobiError::Degenerate { .. }), "{err}");
    }

    #[test]
    fn json_round_trip() {
        let rd = RootData::build_a_type(3).unwrap();
        let j = jacobi_poly(&rd, &rd.theta().clone(), KParam::Formal).unwrap();
        let js = serde_json::to_string(&j).unwrap();
        assert!(js.contains("\"k\":\"formal\""));
        let back: JacobiElement = serde_json::from_str(&js).unwrap();
        assert_eq!(back, j);
    }
}
