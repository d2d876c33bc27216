//! The affine Weyl denominator and the Weyl–Kac character formula.

use exact_algebra::RatFunc;
use num_rational::Rational64;
use root_data::{RootData, Weight};

use crate::orbit::{check_level_dominant, orbit_with_degrees};
use crate::{AffineError, AffineSeries};

fn one_minus(rd: &RootData, mu: &Weight, d: i64, order: i64) -> AffineSeries {
    let mut f = AffineSeries::zero(rd.n(), 0, order);
    f.add_term(Weight::zero(rd.n()), 0, RatFunc::one());
    f.add_term(mu.clone(), d, RatFunc::one().neg());
    f
}

/// `∏_{α̂ > 0} (1 − e^{−α̂})` through `p`-order `order`, a level-0 series.
///
/// The positive affine roots are `α > 0`, `α + nδ` for `α ∈ R` and `n ≥ 1`,
/// and `nδ` with multiplicity `r`; `e^{−δ} = p`.
pub fn denominator_product(rd: &RootData, order: i64) -> AffineSeries {
    let n = rd.n();
    let zero = Weight::zero(n);
    let mut acc = AffineSeries::zero(n, 0, order);
    acc.add_term(zero.clone(), 0, RatFunc::one());
    for alpha in rd.positive_roots() {
        acc = acc.mul(&one_minus(rd, &-alpha, 0, order));
    }
    for m in 1..=order {
        for _ in 0..rd.rank() {
            acc = acc.mul(&one_minus(rd, &zero, m, order));
        }
        for alpha in rd.roots() {
            acc = acc.mul(&one_minus(rd, &-&alpha, m, order));
        }
    }
    acc
}

/// `δ̂ = e^{ρ̂} ∏_{α̂ > 0} (1 − e^{−α̂})`, a level-`h∨` series.
pub fn affine_denominator(rd: &RootData, order: i64) -> AffineSeries {
    let prod = denominator_product(rd, order);
    let mut out = AffineSeries::zero(rd.n(), rd.dual_coxeter(), order);
    for (mu, d, c) in prod.terms() {
        out.add_term(mu + rd.rho(), d, c.clone());
    }
    out
}

/// `δ̂′ = e^{−(ρ, ρ)/(2h∨) δ} δ̂`, i.e. `δ̂` times `p^{(ρ, ρ)/(2h∨)}`.
pub fn normalized_denominator(rd: &RootData, order: i64) -> AffineSeries {
    let offset = rd.rho().norm2() / Rational64::from_integer(2 * rd.dual_coxeter());
    affine_denominator(rd, order).with_offset(offset)
}

/// `ch L_{λ + KΛ₀}` through `p`-order `order`, from
/// `Σ_ŵ ε(ŵ) e^{ŵ(λ̂ + ρ̂) − ρ̂}` divided by `∏_{α̂>0} (1 − e^{−α̂})`.
pub fn weyl_kac_character(
    rd: &RootData,
    lam: &Weight,
    level: i64,
    order: i64,
) -> Result<AffineSeries, AffineError> {
    check_level_dominant(rd, lam, level)?;
    let n = rd.n();
    let shifted = lam + rd.rho();
    let mut numerator = AffineSeries::zero(n, level, order);
    for (nu, d, sign) in orbit_with_degrees(rd, &shifted, level + rd.dual_coxeter(), order) {
        numerator.add_term(&nu - rd.rho(), d, RatFunc::from_integer(sign));
    }
    let denom = denominator_product(rd, order);
    let mut out = AffineSeries::zero(n, level, order);
    for d in 0..=order {
        let mut rest = numerator.layer(d);
        for i in 1..=d {
            let di = denom.layer(i);
            if di.is_empty() {
                continue;
            }
            rest = rest.sub(&di.mul(&out.layer(d - i)));
        }
        let mut q = rest;
        for alpha in rd.positive_roots() {
            q = q.div_by_one_minus(&-alpha).ok_or_else(|| {
                AffineError::Internal(format!(
                    "Weyl–Kac numerator layer p^{d} is not divisible by the denominator"
                ))
            })?;
        }
        for (w, c) in q.terms() {
            out.add_term(w.clone(), d, c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::weyl::{weyl_character, weyl_denominator};
    use exact_algebra::LatticePoly;

    #[test]
    fn bottom_layer_is_finite_denominator() {
        for n in 2..=4 {
            let rd = RootData::build_a_type(n).unwrap();
            let d = affine_denominator(&rd, 2);
            let finite: LatticePoly<RatFunc> = weyl_denominator(&rd);
            assert_eq!(d.layer(0), finite);
        }
    }

    #[test]
    fn sl2_first_layer() {
        // (1 − p e^{−α})(1 − p e^{α})(1 − p) contributes −(e^{−α} + e^{α} + 1) at p¹.
        let rd = RootData::build_a_type(2).unwrap();
        let prod = denominator_product(&rd, 1);
        let alpha = Weight::from_gl(&[1, -1]);
        let finite =
            LatticePoly::<RatFunc>::one(2).sub(&LatticePoly::monomial(-&alpha, RatFunc::one()));
        let layer: LatticePoly<RatFunc> = LatticePoly::from_terms(
            2,
            [
                (alpha.clone(), RatFunc::one().neg()),
                (Weight::zero(2), RatFunc::one().neg()),
                (-&alpha, RatFunc::one().neg()),
            ],
        );
        assert_eq!(prod.layer(1), layer.mul(&finite));
    }

    #[test]
    fn character_bottom_layer() {
        let rd = RootData::build_a_type(3).unwrap();
        for lam in rd.dominant_of_level(2) {
            let ch = weyl_kac_character(&rd, &lam, 2, 2).unwrap();
            let finite: LatticePoly<RatFunc> = weyl_character(&rd, &lam).unwrap();
            assert_eq!(ch.layer(0), finite);
        }
    }

    #[test]
    fn sl2_offset() {
        let rd = RootData::build_a_type(2).unwrap();
        assert_eq!(
            normalized_denominator(&rd, 0).offset(),
            Rational64::new(1, 8)
        );
    }
}
