//! The operator `M_k` on `W`-invariant elements.

use exact_algebra::weyl::integral_pairing;
use exact_algebra::{LatticePoly, RatFunc};
use root_data::{RootData, Weight};

use crate::{JacobiError, KParam};

fn rational(r: num_rational::Rational64) -> RatFunc {
    RatFunc::from_ratio(*r.numer(), *r.denom()).expect("nonzero denominator")
}

/// `(μ, μ + 2kρ)` in `ℚ(k)`.
pub fn mk_eigenvalue(rd: &RootData, mu: &Weight, k: KParam) -> RatFunc {
    let two_rho = rational(mu.pair(rd.rho()) * 2);
    rational(mu.norm2()).add(&k.as_ratfunc().mul(&two_rho))
}

/// Apply `M_k` to a `W`-invariant element.
///
/// For each positive root `α` the terms `e^μ` and `e^{s_α μ}` with
/// `m = (μ, α) > 0` pair up, and `(1 − e^α)^{-1} ∂_α` sends
/// `c (e^μ + e^{s_α μ})` to the finite string `−c m Σ_{j=1}^{m} e^{μ − jα}`.
pub fn sutherland_mk_apply(
    rd: &RootData,
    f: &LatticePoly<RatFunc>,
    k: KParam,
) -> Result<LatticePoly<RatFunc>, JacobiError> {
    if f.n() != rd.n() {
        return Err(JacobiError::Domain(format!(
            "element has rank {} but root data has {}",
            f.n() - 1,
            rd.rank()
        )));
    }
    if !f.is_w_invariant() {
        return Err(JacobiError::Domain("M_k needs a W-invariant input".into()));
    }
    Ok(apply_unchecked(rd, f, k))
}

pub(crate) fn apply_unchecked(
    rd: &RootData,
    f: &LatticePoly<RatFunc>,
    k: KParam,
) -> LatticePoly<RatFunc> {
    let kk = k.as_ratfunc();
    let mut out = LatticePoly::zero(rd.n());
    for (mu, c) in f.terms() {
        out.add_term(mu.clone(), c.mul(&mk_eigenvalue(rd, mu, k)));
        for alpha in rd.positive_roots() {
            let m = integral_pairing(alpha, mu);
            if m <= 0 {
                continue;
            }
            let step = kk.mul(c).scale_int(2 * m);
            for j in 1..=m {
                out.add_term(mu - &alpha.scale(j), step.clone());
            }
        }
    }
    out
}
