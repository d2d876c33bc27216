//! `P_λ` as the unitriangular eigenvector of `M_1`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use exact_algebra::{LatticePoly, RatFunc};
use root_data::RootData;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::operator::{eigenvalue_poly, operator_image};
use crate::{MacdonaldError, Mode, Partition, SymPoly};

/// `P_λ = Σ_{μ ≤ λ} c_{λμ} m_μ` with `c_{λλ} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacdonaldBasisElement {
    pub lambda: Partition,
    pub mode: Mode,
    pub coeffs: SymPoly,
}

type CacheKey = (Partition, Mode);

fn poly_cache() -> &'static RwLock<HashMap<CacheKey, Arc<MacdonaldBasisElement>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<MacdonaldBasisElement>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Compute (or fetch from the process-wide cache) `P_λ` in the given mode.
///
/// Back-substitution over the dominated partitions `ν < λ` solves
/// `c_ν (c_λ¹ − c_ν¹) = Σ_{ν < μ ≤ λ} c_μ ⟨M_1 m_μ, m_ν⟩`.
pub fn macdonald_poly(
    rd: &RootData,
    lam: &Partition,
    mode: Mode,
) -> Result<Arc<MacdonaldBasisElement>, MacdonaldError> {
    if lam.n() != rd.n() {
        return Err(MacdonaldError::Domain(format!(
            "{lam} does not have {} parts",
            rd.n()
        )));
    }
    let key = (lam.clone(), mode);
    if let Some(hit) = poly_cache().read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let basis = lam.dominated();
    let images = basis
        .iter()
        .map(|mu| {
            let img = operator_image(1, mu)?;
            Ok(img
                .iter()
                .map(|(nu, a)| (nu.clone(), mode.specialize(a)))
                .collect::<BTreeMap<_, _>>())
        })
        .collect::<Result<Vec<_>, MacdonaldError>>()?;
    let eigen = mode.specialize(&eigenvalue_poly(1, lam));
    let mut coeffs: Vec<RatFunc> = Vec::with_capacity(basis.len());
    for (j, nu) in basis.iter().enumerate() {
        let diag = images[j].get(nu).cloned().unwrap_or_else(RatFunc::zero);
        if diag != mode.specialize(&eigenvalue_poly(1, nu)) {
            return Err(MacdonaldError::Internal(format!(
                "diagonal entry of M_1 at {nu} differs from its eigenvalue"
            )));
        }
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
        let gap = eigen.sub(&diag);
        if gap.is_zero() {
            return Err(MacdonaldError::Degenerate {
                lambda: lam.to_string(),
                mu: nu.to_string(),
            });
        }
        coeffs.push(rhs.div(&gap)?);
    }
    let coeffs: SymPoly = basis
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let element = Arc::new(MacdonaldBasisElement {
        lambda: lam.clone(),
        mode,
        coeffs,
    });
    poly_cache()
        .write()
        .expect("cache lock")
        .insert(key, element.clone());
    Ok(element)
}

impl MacdonaldBasisElement {
    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// Coefficient of `m_μ`.
    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.coeffs.get(mu).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The `sl_n` element `Σ c_μ m_μ` in the weight-lattice group algebra.
    pub fn to_lattice(&self, rd: &RootData) -> LatticePoly<RatFunc> {
        let coeffs: BTreeMap<_, _> = self
            .coeffs
            .iter()
            .map(|(mu, c)| (mu.weight(), c.clone()))
            .collect();
        LatticePoly::from_orbit_coefficients(rd, &coeffs)
    }

    /// Rewrite every coefficient in Macdonald's `(q, t)` convention, i.e.
    /// as a function of `q² ↦ q`, `t² ↦ t`.
    pub fn to_macdonald_convention(&self) -> Result<SymPoly, MacdonaldError> {
        self.coeffs
            .iter()
            .map(|(mu, c)| Ok((mu.clone(), c.to_macdonald_convention()?)))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    mu: Partition,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    lambda: Partition,
    mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    coeffs: Vec<CoeffJson>,
}

impl Serialize for MacdonaldBasisElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementJson {
            n: self.n(),
            lambda: self.lambda.clone(),
            mode: match self.mode {
                Mode::Generic => "generic".into(),
                Mode::TEqQk(_) => "t_eq_qk".into(),
            },
            k: self.mode.k(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(mu, c)| CoeffJson {
                    mu: mu.clone(),
                    num: c.num_string(),
                    den: c.den_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MacdonaldBasisElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let js = ElementJson::deserialize(d)?;
        let mode = match (js.mode.as_str(), js.k) {
            ("generic", None) => Mode::Generic,
            ("t_eq_qk", Some(k)) => Mode::TEqQk(k),
            (m, _) => return Err(D::Error::custom(format!("bad mode {m:?}"))),
        };
        let mut coeffs = SymPoly::new();
        for c in js.coeffs {
            let v = RatFunc::from_num_den_strings(&c.num, &c.den).map_err(D::Error::custom)?;
            coeffs.insert(c.mu, v);
        }
        if js.lambda.n() != js.n {
            return Err(D::Error::custom("lambda has the wrong number of parts"));
        }
        Ok(MacdonaldBasisElement {
            lambda: js.lambda,
            mode,
            coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_second_power() {
        let rd = RootData::build_a_type(2).unwrap();
        let lam = Partition::new(&[2, 0], 2).unwrap();
        let p = macdonald_poly(&rd, &lam, Mode::Generic).unwrap();
        let expect: RatFunc = "(1 + q^2 - t^2 - q^2*t^2)/(1 - q^2*t^2)".parse().unwrap();
        assert_eq!(p.coeff(&Partition::new(&[1, 1], 2).unwrap()), expect);
        assert!(p.coeff(&lam).is_one());
    }

    #[test]
    fn json_round_trip() {
        let rd = RootData::build_a_type(3).unwrap();
        let lam = Partition::new(&[2, 1], 3).unwrap();
        let p = macdonald_poly(&rd, &lam, Mode::TEqQk(2)).unwrap();
        let js = serde_json::to_string(&*p).unwrap();
        let back: MacdonaldBasisElement = serde_json::from_str(&js).unwrap();
        assert_eq!(back, *p);
        assert!(js.contains("\"k\":2"));
    }
}
