//! Weyl-group constructions in the group algebra: orbit sums, the Weyl
//! denominator, characters and `q`-dimensions.

use root_data::{RootData, Weight};

use crate::ring::Ring;
use crate::{AlgebraError, LatticePoly, Poly, RatFunc};

/// The orbit sum `m_λ = Σ_{μ ∈ Wλ} e^μ`.
pub fn orbitsum<C: Ring>(rd: &RootData, lam: &Weight) -> Result<LatticePoly<C>, AlgebraError> {
    rd.check_dominant_integral(lam)?;
    Ok(LatticePoly::from_terms(
        rd.n(),
        rd.weyl_orbit(lam).into_iter().map(|mu| (mu, C::one())),
    ))
}

/// `∏_{α > 0} (1 − e^{−α})`, the Weyl denominator without its `e^ρ`.
pub fn denominator_factors<C: Ring>(rd: &RootData) -> LatticePoly<C> {
    let n = rd.n();
    let mut acc = LatticePoly::one(n);
    for alpha in rd.positive_roots() {
        let factor = LatticePoly::one(n).sub(&LatticePoly::monomial(-alpha, C::one()));
        acc = acc.mul(&factor);
    }
    acc
}

/// The Weyl denominator `δ = e^ρ ∏_{α > 0} (1 − e^{−α})`.
pub fn weyl_denominator<C: Ring>(rd: &RootData) -> LatticePoly<C> {
    denominator_factors(rd).shift(rd.rho())
}

/// `Σ_w ε(w) e^{wμ}`.
pub fn alternating_sum<C: Ring>(rd: &RootData, mu: &Weight) -> LatticePoly<C> {
    let mut out = LatticePoly::zero(rd.n());
    for (w, sign) in rd.signed_orbit(mu) {
        out.add_term(w, C::from_i64(sign));
    }
    out
}

/// Exact quotient by `δ`; fails if `δ` does not divide `f`.
pub fn divide_by_delta<C: Ring>(
    rd: &RootData,
    f: &LatticePoly<C>,
) -> Result<LatticePoly<C>, AlgebraError> {
    let mut acc = f.shift(&-rd.rho());
    for alpha in rd.positive_roots() {
        acc = acc
            .div_by_one_minus(&-alpha)
            .ok_or_else(|| AlgebraError::InexactDivision(format!("by 1 - e^-{alpha}")))?;
    }
    Ok(acc)
}

/// The Weyl character `ch L_λ = Σ_w ε(w) e^{w(λ+ρ)} / δ`.
pub fn weyl_character<C: Ring>(
    rd: &RootData,
    lam: &Weight,
) -> Result<LatticePoly<C>, AlgebraError> {
    rd.check_dominant_integral(lam)?;
    let num = alternating_sum(rd, &(lam + rd.rho()));
    divide_by_delta(rd, &num)
}

/// The `q`-number `[x] = (q^x − q^{−x}) / (q − q^{−1})` for integer `x`.
pub fn q_number(x: i64) -> RatFunc {
    let top = RatFunc::q_pow(x, 1).sub(&RatFunc::q_pow(-x, 1));
    let bottom = RatFunc::q_pow(1, 1).sub(&RatFunc::q_pow(-1, 1));
    top.div(&bottom).expect("q - 1/q is nonzero")
}

/// `dim_q L_λ = ∏_{α > 0} [(α, λ+ρ)] / [(α, ρ)]`.
pub fn qdim(rd: &RootData, lam: &Weight) -> Result<RatFunc, AlgebraError> {
    rd.check_dominant_integral(lam)?;
    let shifted = lam + rd.rho();
    let mut acc = RatFunc::one();
    for alpha in rd.positive_roots() {
        let a = integral_pairing(alpha, &shifted);
        let b = integral_pairing(alpha, rd.rho());
        acc = acc.mul(&q_number(a)).div(&q_number(b))?;
    }
    Ok(acc)
}

/// `(1/|W|) [f · bar(g) · δ · bar(δ)]₀`, the inner product for which Weyl
/// characters are orthonormal.
pub fn weyl_inner_product(
    rd: &RootData,
    f: &LatticePoly<RatFunc>,
    g: &LatticePoly<RatFunc>,
) -> RatFunc {
    let d: LatticePoly<Poly> = weyl_denominator(rd);
    let kernel = d.mul(&d.bar()).to_ratfunc(1);
    let ct = f.mul(&g.bar()).mul(&kernel).constant_term();
    ct.div(&RatFunc::from_integer(rd.weyl_order()))
        .expect("nonzero group order")
}

/// `(α, μ)` for a root and a weight in `P`, which is an integer.
pub fn integral_pairing(alpha: &Weight, mu: &Weight) -> i64 {
    let nn = (alpha.n() * alpha.n()) as i64;
    let s = alpha.pair_scaled(mu);
    assert_eq!(s % nn, 0, "pairing of {alpha} with {mu} is not integral");
    s / nn
}
