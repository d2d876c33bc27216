//! The affine operator
//! `M̂_k = Δ̂ − 2k Σ_{α̂ > 0} (1 − e^{α̂})^{−1} ∂_{α̂} + 2k ∂_{ρ̂}`.

use exact_algebra::weyl::integral_pairing;
use exact_algebra::RatFunc;
use jacobi_classical::KParam;
use num_rational::Rational64;
use root_data::RootData;

use crate::orbit::check_invariant;
use crate::{AffineError, AffineSeries};

fn rational(r: Rational64) -> RatFunc {
    RatFunc::from_ratio(*r.numer(), *r.denom()).expect("nonzero denominator")
}

/// Sum of the divisors of `s`.
fn divisor_sum(s: i64) -> i64 {
    (1..=s).filter(|d| s % d == 0).sum()
}

/// `K + k h∨` in `ℚ(k)`.
pub fn shifted_level(rd: &RootData, level: i64, k: KParam) -> RatFunc {
    RatFunc::from_integer(level).add(&k.as_ratfunc().scale_int(rd.dual_coxeter()))
}

/// Apply `M̂_k` to an invariant level-`K` series through its truncation.
///
/// For a real root `α̂ = α + nδ` and a term `c e^{μ̂}` with
/// `m = (α̂, μ̂) = (α, μ) + nK > 0`, the pair `{μ̂, s_α̂ μ̂}` collapses to
/// `2k c m Σ_{j=1}^{m} e^{μ̂ − jα̂}`, which sits at `p`-degrees `D + jn`.
/// The imaginary roots `nδ` (multiplicity `r`) add
/// `2k r K Σ_{s ≥ 1} σ(s) p^s` times each term, `σ` the divisor sum.
pub fn mhat_apply(rd: &RootData, f: &AffineSeries, k: KParam) -> Result<AffineSeries, AffineError> {
    if f.n() != rd.n() {
        return Err(AffineError::Domain(
            "series and root data have different ranks".into(),
        ));
    }
    if f.level() < 0 {
        return Err(AffineError::Unsupported(format!(
            "level K = {} is negative",
            f.level()
        )));
    }
    if shifted_level(rd, f.level(), k).is_zero() {
        return Err(AffineError::Critical {
            level: f.level(),
            k: k.to_string(),
        });
    }
    check_invariant(rd, f)?;
    Ok(apply_unchecked(rd, f, k))
}

pub(crate) fn apply_unchecked(rd: &RootData, f: &AffineSeries, k: KParam) -> AffineSeries {
    let level = f.level();
    let order = f.order();
    let hv = rd.dual_coxeter();
    let kk = k.as_ratfunc();
    let two_k = kk.scale_int(2);
    let roots = rd.roots();
    let mut out = AffineSeries::zero(f.n(), level, order).with_offset(f.offset());
    for (mu, d, c) in f.terms() {
        let a = f.offset() + Rational64::from_integer(d);
        let norm = mu.norm2() - a * (2 * level);
        let rho = mu.pair(rd.rho()) - a * hv;
        out.add_term(
            mu.clone(),
            d,
            c.mul(&rational(norm).add(&two_k.mul(&rational(rho)))),
        );
        let kc = two_k.mul(c);
        for shift in 0..=order - d {
            let candidates = if shift == 0 {
                rd.positive_roots()
            } else {
                &roots[..]
            };
            for alpha in candidates {
                let m = integral_pairing(alpha, mu) + shift * level;
                if m <= 0 {
                    continue;
                }
                let step = kc.scale_int(m);
                for j in 1..=m {
                    if d + j * shift > order {
                        break;
                    }
                    out.add_term(mu - &alpha.scale(j), d + j * shift, step.clone());
                }
            }
        }
        if level != 0 {
            let imag = kc.scale_int(rd.rank() as i64 * level);
            for s in 1..=order - d {
                out.add_term(mu.clone(), d + s, imag.scale_int(divisor_sum(s)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::affine_orbitsum;
    use root_data::Weight;

    #[test]
    fn divisor_sums() {
        assert_eq!(
            (1..=6).map(divisor_sum).collect::<Vec<_>>(),
            vec![1, 3, 4, 7, 6, 12]
        );
    }

    #[test]
    fn basic_orbit_has_zero_leading_eigenvalue() {
        let rd = RootData::build_a_type(2).unwrap();
        let m = affine_orbitsum(&rd, &Weight::zero(2), 1, 3).unwrap();
        let out = mhat_apply(&rd, &m, KParam::Formal).unwrap();
        assert!(out.coeff(&Weight::zero(2), 0).is_zero());
    }

    #[test]
    fn level_zero_constant() {
        let rd = RootData::build_a_type(3).unwrap();
        let mut one = AffineSeries::zero(3, 0, 4);
        one.add_term(Weight::zero(3), 0, RatFunc::one());
        assert!(mhat_apply(&rd, &one, KParam::integer(2)).unwrap().is_zero());
    }

    #[test]
    fn critical_shift_rejected() {
        let rd = RootData::build_a_type(2).unwrap();
        let m = affine_orbitsum(&rd, &Weight::zero(2), 2, 2).unwrap();
        let err = mhat_apply(&rd, &m, KParam::integer(-1)).unwrap_err();
        assert!(matches!(err, AffineError::Critical { .. }));
    }
}
