//! The Macdonald difference operators
//! `M_r = t^{r(r−n)} Σ_{|I|=r} ∏_{i∈I, j∉I} (t²x_i − x_j)/(x_i − x_j) · T_{q²,I}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use exact_algebra::{Poly, RatFunc, Var};
use root_data::RootData;

use crate::glpoly::GlPoly;
use crate::{MacdonaldError, Mode, Partition, SymPoly};

type ImageKey = (usize, Partition);
type Image = Arc<BTreeMap<Partition, Poly>>;

fn image_cache() -> &'static RwLock<HashMap<ImageKey, Image>> {
    static CACHE: OnceLock<RwLock<HashMap<ImageKey, Image>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn t_pow(e: i64) -> Poly {
    Poly::var_pow(Var::T, e)
}

/// Index sets of size `r` in `0..n`, as bit masks.
pub(crate) fn subsets(n: usize, r: usize) -> impl Iterator<Item = u32> {
    (0u32..(1 << n)).filter(move |m| m.count_ones() as usize == r)
}

fn check_r(n: usize, r: usize) -> Result<(), MacdonaldError> {
    if r == 0 || r > n {
        return Err(MacdonaldError::Domain(format!(
            "operator index r = {r} outside 1..={n}"
        )));
    }
    Ok(())
}

/// `M_r m_μ` on the monomial symmetric basis, with `q` and `t` symbolic.
///
/// The sum over index sets is put over the Vandermonde product and the
/// division is carried out exactly, one factor `x_a − x_b` at a time.
pub fn operator_image(r: usize, mu: &Partition) -> Result<Image, MacdonaldError> {
    let n = mu.n();
    check_r(n, r)?;
    let key = (r, mu.clone());
    if let Some(hit) = image_cache().read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let f = GlPoly::monomial_symmetric(mu);
    let mut total = GlPoly::zero(n);
    let t2 = t_pow(2);
    let minus_one = Poly::constant(-1);
    let one = Poly::one();
    for mask in subsets(n, r) {
        let inside = |i: usize| mask & (1 << i) != 0;
        let mut g = f.map_terms(|e| {
            let shift: i64 = (0..n).filter(|&i| inside(i)).map(|i| 2 * e[i]).sum();
            Poly::var_pow(Var::Q, shift)
        });
        let mut sign = 1i64;
        for a in 0..n {
            for b in a + 1..n {
                match (inside(a), inside(b)) {
                    (true, false) => g = g.mul_linear(a, &t2, b, &minus_one),
                    (false, true) => {
                        g = g.mul_linear(b, &t2, a, &minus_one);
                        sign = -sign;
                    }
                    _ => g = g.mul_linear(a, &one, b, &minus_one),
                }
            }
        }
        total.add_scaled(&g, &Poly::constant(sign));
    }
    for a in 0..n {
        for b in a + 1..n {
            total = total.div_difference(a, b)?;
        }
    }
    let norm = t_pow((r as i64) * (r as i64 - n as i64));
    let image: BTreeMap<Partition, Poly> = total
        .symmetric_coefficients()?
        .into_iter()
        .map(|(p, c)| (p, c.mul(&norm)))
        .collect();
    let image = Arc::new(image);
    image_cache()
        .write()
        .expect("cache lock")
        .insert(key, image.clone());
    Ok(image)
}

/// Apply `M_r` to a symmetric polynomial given on the monomial basis.
pub fn macdonald_op_apply(
    rd: &RootData,
    r: usize,
    f: &SymPoly,
    mode: Mode,
) -> Result<SymPoly, MacdonaldError> {
    check_r(rd.n(), r)?;
    let mut out: SymPoly = BTreeMap::new();
    for (mu, c) in f {
        if mu.n() != rd.n() {
            return Err(MacdonaldError::Domain(format!(
                "{mu} does not have {} parts",
                rd.n()
            )));
        }
        for (nu, a) in operator_image(r, mu)?.iter() {
            let term = c.mul(&mode.specialize(a));
            let entry = out.entry(nu.clone()).or_insert_with(RatFunc::zero);
            *entry = entry.add(&term);
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// The eigenvalue `c_λ^r = Σ_{|I|=r} ∏_{i∈I} q^{2λ_i} t^{2ρ_i}` as a
/// polynomial in `q`, `t`.
pub fn eigenvalue_poly(r: usize, lam: &Partition) -> Poly {
    let n = lam.n();
    let mut acc = Poly::zero();
    for mask in subsets(n, r) {
        let mut e = [0i64; 3];
        for i in (0..n).filter(|&i| mask & (1 << i) != 0) {
            e[0] += 2 * lam.parts()[i];
            e[1] += n as i64 - 1 - 2 * i as i64;
        }
        acc = acc.add(&Poly::monomial(e, 1));
    }
    acc
}

/// `c_λ^r` in the requested mode.
pub fn macdonald_eigenvalue(
    rd: &RootData,
    r: usize,
    lam: &Partition,
    mode: Mode,
) -> Result<RatFunc, MacdonaldError> {
    check_r(rd.n(), r)?;
    if lam.n() != rd.n() {
        return Err(MacdonaldError::Domain(format!(
            "{lam} does not have {} parts",
            rd.n()
        )));
    }
    Ok(mode.specialize(&eigenvalue_poly(r, lam)))
}
