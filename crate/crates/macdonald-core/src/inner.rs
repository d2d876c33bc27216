//! The inner product at `t = q^k` and the function `φ₀`.
//!
//! At `t = q^k` the weight function becomes the finite product
//! `Δ_k = ∏_{α ∈ R} ∏_{i=0}^{k−1} (1 − q^{2i} e^α)` and
//! `⟨f, g⟩_k = (1/|W|) [f · bar(g) · Δ_k]₀`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use exact_algebra::{LatticePoly, Poly, RatFunc, Var};
use root_data::{RootData, Weight};

use crate::{check_positive_k, MacdonaldError, SymPoly};

fn kernel_cache() -> &'static RwLock<HashMap<(usize, i64), Arc<LatticePoly<Poly>>>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, i64), Arc<LatticePoly<Poly>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `Δ_k` expanded, with integer-polynomial coefficients in `q`.
pub fn delta_k(rd: &RootData, k: i64) -> Result<Arc<LatticePoly<Poly>>, MacdonaldError> {
    check_positive_k(k)?;
    let key = (rd.n(), k);
    if let Some(hit) = kernel_cache().read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let n = rd.n();
    let mut acc = LatticePoly::<Poly>::one(n);
    for alpha in rd.roots() {
        for i in 0..k {
            let factor = LatticePoly::one(n).sub(&LatticePoly::monomial(
                alpha.clone(),
                Poly::var_pow(Var::Q, 2 * i),
            ));
            acc = acc.mul(&factor);
        }
    }
    let acc = Arc::new(acc);
    kernel_cache()
        .write()
        .expect("cache lock")
        .insert(key, acc.clone());
    Ok(acc)
}

/// `⟨m_ν, m_κ⟩_k = (|Wν| / |W|) Σ_{μ ∈ Wκ} [Δ_k]_{μ − ν}` for dominant ν, κ.
fn gram_entry(rd: &RootData, kernel: &LatticePoly<Poly>, nu: &Weight, kappa: &Weight) -> RatFunc {
    let orbit_nu = rd.weyl_orbit(nu).len() as i64;
    let mut sum = Poly::zero();
    for mu in rd.weyl_orbit(kappa) {
        if let Some(c) = kernel.get(&(&mu - nu)) {
            sum = sum.add(c);
        }
    }
    RatFunc::from_poly(sum.scale(&orbit_nu.into()), 1)
        .div(&RatFunc::from_integer(rd.weyl_order()))
        .expect("nonzero group order")
}

/// Bilinear form on orbit-sum coefficient maps.
fn gram_pairing(
    rd: &RootData,
    k: i64,
    f: &BTreeMap<Weight, RatFunc>,
    g: &BTreeMap<Weight, RatFunc>,
) -> Result<RatFunc, MacdonaldError> {
    let kernel = delta_k(rd, k)?;
    let mut acc = RatFunc::zero();
    for (nu, a) in f {
        for (kappa, b) in g {
            let entry = gram_entry(rd, &kernel, nu, kappa);
            if !entry.is_zero() {
                acc = acc.add(&a.mul(b).mul(&entry));
            }
        }
    }
    Ok(acc)
}

/// `⟨f, g⟩_k` for `W`-invariant `f`, `g` in the weight-lattice algebra.
pub fn inner_product_k(
    rd: &RootData,
    f: &LatticePoly<RatFunc>,
    g: &LatticePoly<RatFunc>,
    k: i64,
) -> Result<RatFunc, MacdonaldError> {
    check_positive_k(k)?;
    let fc = f.orbit_coefficients()?;
    let gc = g.orbit_coefficients()?;
    gram_pairing(rd, k, &fc, &gc)
}

/// `⟨f, g⟩_k` straight from the constant-term definition; works for any
/// inputs and serves as a cross-check of [`inner_product_k`].
pub fn inner_product_k_direct(
    rd: &RootData,
    f: &LatticePoly<RatFunc>,
    g: &LatticePoly<RatFunc>,
    k: i64,
) -> Result<RatFunc, MacdonaldError> {
    let kernel = delta_k(rd, k)?;
    let mut acc = RatFunc::zero();
    for (a, ca) in f.terms() {
        for (b, cb) in g.terms() {
            // f_a e^a · g_b e^{−b} · Δ_{b−a} e^{b−a}
            if let Some(d) = kernel.get(&(b - a)) {
                acc = acc.add(&ca.mul(cb).mul(&RatFunc::from_poly(d.clone(), 1)));
            }
        }
    }
    Ok(acc.div(&RatFunc::from_integer(rd.weyl_order()))?)
}

/// `⟨f, g⟩_k` for symmetric polynomials in the `gl_n` picture.
///
/// The kernel has degree zero, so only components of equal total degree
/// pair; each such pair is evaluated on its `sl_n` projection.
pub fn sym_inner_product(
    rd: &RootData,
    f: &SymPoly,
    g: &SymPoly,
    k: i64,
) -> Result<RatFunc, MacdonaldError> {
    check_positive_k(k)?;
    let mut by_size_f: BTreeMap<i64, BTreeMap<Weight, RatFunc>> = BTreeMap::new();
    for (p, c) in f {
        by_size_f
            .entry(p.size())
            .or_default()
            .insert(p.weight(), c.clone());
    }
    let mut by_size_g: BTreeMap<i64, BTreeMap<Weight, RatFunc>> = BTreeMap::new();
    for (p, c) in g {
        by_size_g
            .entry(p.size())
            .or_default()
            .insert(p.weight(), c.clone());
    }
    let mut acc = RatFunc::zero();
    for (size, fc) in &by_size_f {
        if let Some(gc) = by_size_g.get(size) {
            acc = acc.add(&gram_pairing(rd, k, fc, gc)?);
        }
    }
    Ok(acc)
}

/// `φ₀ = e^{(k−1)ρ} ∏_{i=1}^{k−1} ∏_{α > 0} (1 − q^{2i} e^{−α})`.
pub fn phi0(rd: &RootData, k: i64) -> Result<LatticePoly<Poly>, MacdonaldError> {
    check_positive_k(k)?;
    let n = rd.n();
    let mut acc = LatticePoly::monomial(rd.rho().scale(k - 1), Poly::one());
    for i in 1..k {
        for alpha in rd.positive_roots() {
            let factor = LatticePoly::one(n)
                .sub(&LatticePoly::monomial(-alpha, Poly::var_pow(Var::Q, 2 * i)));
            acc = acc.mul(&factor);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{macdonald_poly, Mode, Partition};

    #[test]
    fn gram_matches_constant_term() {
        for n in 2..=3 {
            let rd = RootData::build_a_type(n).unwrap();
            for k in 1..=2 {
                let ps: Vec<_> = Partition::all_up_to(n, 3)
                    .into_iter()
                    .filter(|p| p.size() == 3)
                    .map(|p| {
                        macdonald_poly(&rd, &p, Mode::TEqQk(k))
                            .unwrap()
                            .to_lattice(&rd)
                    })
                    .collect();
                for a in &ps {
                    for b in &ps {
                        assert_eq!(
                            inner_product_k(&rd, a, b, k).unwrap(),
                            inner_product_k_direct(&rd, a, b, k).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unit_norm_for_k_one() {
        let rd = RootData::build_a_type(2).unwrap();
        let one = LatticePoly::<RatFunc>::one(2);
        assert!(inner_product_k(&rd, &one, &one, 1).unwrap().is_one());
        assert!(inner_product_k(&rd, &one, &one, 0).is_err());
    }
}
