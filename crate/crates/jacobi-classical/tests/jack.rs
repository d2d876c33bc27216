use exact_algebra::weyl::{orbitsum, weyl_character, weyl_denominator};
use exact_algebra::{LatticePoly, RatFunc};
use jacobi_classical::{
    classical_inner_product, jacobi_poly, macdonald_to_jack_limit, mk_eigenvalue,
    sutherland_mk_apply, JacobiError, KParam,
};
use macdonald_core::Partition;
use num_rational::Rational64;
use proptest::prelude::*;
use root_data::{RootData, Weight};

fn rd(n: usize) -> RootData {
    RootData::build_a_type(n).unwrap()
}

fn dominant_up_to(n: usize, size: i64) -> Vec<Weight> {
    Partition::all_up_to(n, size)
        .iter()
        .map(|p| p.weight())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn rat(r: Rational64) -> RatFunc {
    RatFunc::from_ratio(*r.numer(), *r.denom()).unwrap()
}

/// `Δ_h f − k Σ_{α>0} (1 + e^α)/(1 − e^α) ∂_α f`, with each pair
/// `{μ, s_α μ}` collapsed to `k c m (e^μ + 2 Σ_{0<i<m} e^{μ−iα} + e^{μ−mα})`.
fn first_form(rd: &RootData, f: &LatticePoly<RatFunc>, k: &RatFunc) -> LatticePoly<RatFunc> {
    let mut out = f.laplacian();
    for (mu, c) in f.terms() {
        for alpha in rd.positive_roots() {
            let m = exact_algebra::weyl::integral_pairing(alpha, mu);
            if m <= 0 {
                continue;
            }
            let s = k.mul(c).scale_int(m);
            out.add_term(mu.clone(), s.clone());
            out.add_term(mu - &alpha.scale(m), s.clone());
            for i in 1..m {
                out.add_term(mu - &alpha.scale(i), s.scale_int(2));
            }
        }
    }
    out
}

/// `(L_k − k²(ρ,ρ)) g` with
/// `L_k = Δ_h − k(k−1) Σ_{α>0} (α,α) (e^{α/2} − e^{−α/2})^{−2}`,
/// for `g` divisible by every `(1 − e^{−α})²`.
fn sutherland(rd: &RootData, g: &LatticePoly<RatFunc>, k: i64) -> LatticePoly<RatFunc> {
    let mut out = g.laplacian();
    if k * (k - 1) != 0 {
        for alpha in rd.positive_roots() {
            let minus = -alpha;
            let h = g
                .div_by_one_minus(&minus)
                .and_then(|h| h.div_by_one_minus(&minus))
                .expect("δ^k supplies the double root factor")
                .shift(&minus);
            let aa = alpha.norm2();
            out = out.sub(&h.scale(&rat(aa * (k * (k - 1)))));
        }
    }
    out.sub(&g.scale(&rat(rd.rho().norm2() * (k * k))))
}

#[test]
fn k_zero_and_one() {
    for n in 2..=4 {
        let rd = rd(n);
        for lam in dominant_up_to(n, 4) {
            let j0 = jacobi_poly(&rd, &lam, KParam::integer(0)).unwrap();
            assert_eq!(j0.coeffs.len(), 1);
            assert!(j0.coeff(&lam).is_one());
            let j1 = jacobi_poly(&rd, &lam, KParam::integer(1))
                .unwrap()
                .to_lattice(&rd);
            let chi: LatticePoly<RatFunc> = weyl_character(&rd, &lam).unwrap();
            assert_eq!(j1, chi, "lambda = {lam}");
        }
    }
}

#[test]
fn formal_k_specializes() {
    let rd = rd(3);
    for lam in dominant_up_to(3, 4) {
        let formal = jacobi_poly(&rd, &lam, KParam::Formal).unwrap();
        for k in [
            Rational64::new(1, 2),
            Rational64::new(2, 1),
            Rational64::new(7, 3),
        ] {
            let direct = jacobi_poly(&rd, &lam, KParam::Value(k)).unwrap();
            assert_eq!(
                formal.specialize(KParam::Value(k)).unwrap(),
                direct,
                "lambda = {lam}, k = {k}"
            );
        }
    }
}

#[test]
fn macdonald_limit() {
    for n in 2..=3 {
        let rd = rd(n);
        for lam in Partition::all_up_to(n, 4) {
            for k in 0..=3 {
                macdonald_to_jack_limit(&rd, &lam, k)
                    .unwrap_or_else(|e| panic!("{lam}, k = {k}: {e}"));
            }
        }
    }
}

#[test]
fn sl2_limit_value() {
    let rd = rd(2);
    let j = macdonald_to_jack_limit(&rd, &Partition::new(&[2], 2).unwrap(), 2).unwrap();
    assert_eq!(
        j.coeff(&Weight::zero(2)),
        RatFunc::from_ratio(4, 3).unwrap()
    );
}

#[test]
fn sl3_highest_root() {
    let rd = rd(3);
    let theta = rd.theta().clone();
    let j = jacobi_poly(&rd, &theta, KParam::integer(2)).unwrap();
    let limit = macdonald_to_jack_limit(&rd, &Partition::new(&[2, 1], 3).unwrap(), 2).unwrap();
    assert_eq!(limit, j);
    // J_θ = m_θ + c m_0, where (θ, θ + 2kρ) c is the coefficient of m_0 in
    // M_k m_θ: each positive root μ = α contributes the string 2k·2·e^0.
    let expect = RatFunc::from_integer(3 * 2 * 2 * 2)
        .div(&mk_eigenvalue(&rd, &theta, KParam::integer(2)))
        .unwrap();
    assert_eq!(j.coeff(&Weight::zero(3)), expect);
}

#[test]
fn orthogonality() {
    for (n, size, kmax) in [(2, 4, 3), (3, 3, 2)] {
        let rd = rd(n);
        let ws = dominant_up_to(n, size);
        for k in 1..=kmax {
            let js: Vec<_> = ws
                .iter()
                .map(|w| {
                    jacobi_poly(&rd, w, KParam::integer(k))
                        .unwrap()
                        .to_lattice(&rd)
                })
                .collect();
            for (i, a) in js.iter().enumerate() {
                for b in &js[i + 1..] {
                    assert!(classical_inner_product(&rd, a, b, k).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn first_form_agrees() {
    for n in 2..=4 {
        let rd = rd(n);
        for lam in dominant_up_to(n, 4) {
            let m: LatticePoly<RatFunc> = orbitsum(&rd, &lam).unwrap();
            let ours = sutherland_mk_apply(&rd, &m, KParam::Formal).unwrap();
            assert_eq!(
                ours,
                first_form(&rd, &m, &RatFunc::k_var()),
                "lambda = {lam}"
            );
        }
    }
}

#[test]
fn conjugated_sutherland_operator() {
    for n in 2..=3 {
        let rd = rd(n);
        let delta: LatticePoly<RatFunc> = weyl_denominator(&rd);
        for k in 0..=3i64 {
            let dk = delta.pow(k as u32);
            for lam in dominant_up_to(n, 3) {
                let m: LatticePoly<RatFunc> = orbitsum(&rd, &lam).unwrap();
                let lhs = sutherland(&rd, &dk.mul(&m), k);
                let rhs = dk.mul(&sutherland_mk_apply(&rd, &m, KParam::integer(k)).unwrap());
                assert_eq!(lhs, rhs, "n = {n}, k = {k}, lambda = {lam}");
            }
        }
    }
}

#[test]
fn shifted_norm_separates_dominance() {
    for n in 2..=4 {
        let rd = rd(n);
        for lam in dominant_up_to(n, 5) {
            let shifted = &lam + rd.rho();
            for mu in rd.dominant_below(&lam).unwrap().into_iter().skip(1) {
                let s = &mu + rd.rho();
                assert!(s.norm2() < shifted.norm2(), "{mu} < {lam}");
            }
        }
    }
}

#[test]
fn collision_names_partner() {
    let rd = rd(2);
    let alpha = rd.positive_roots()[0].clone();
    match jacobi_poly(&rd, &alpha, KParam::integer(-1)) {
        Err(JacobiError::Degenerate { mu, .. }) => assert_eq!(mu, Weight::zero(2).to_string()),
        other => panic!("expected a collision, got {other:?}"),
    }
}

fn invariant(n: usize) -> impl Strategy<Value = LatticePoly<RatFunc>> {
    let ws = dominant_up_to(n, 3);
    let len = ws.len();
    prop::collection::vec(-3i64..=3, len).prop_map(move |cs| {
        let rd = rd(n);
        let coeffs = ws
            .iter()
            .cloned()
            .zip(cs)
            .filter(|(_, c)| *c != 0)
            .map(|(w, c)| (w, RatFunc::from_integer(c)))
            .collect();
        LatticePoly::from_orbit_coefficients(&rd, &coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn self_adjoint(f in invariant(3), g in invariant(3), k in 1i64..=2) {
        let rd = rd(3);
        let kp = KParam::integer(k);
        let mf = sutherland_mk_apply(&rd, &f, kp).unwrap();
        let mg = sutherland_mk_apply(&rd, &g, kp).unwrap();
        prop_assert_eq!(
            classical_inner_product(&rd, &mf, &g, k).unwrap(),
            classical_inner_product(&rd, &f, &mg, k).unwrap()
        );
    }

    #[test]
    fn leading_coefficient(idx in 0usize..10, k in -3i64..=3) {
        let rd = rd(3);
        let ws = dominant_up_to(3, 3);
        let lam = &ws[idx % ws.len()];
        let m: LatticePoly<RatFunc> = orbitsum(&rd, lam).unwrap();
        let out = sutherland_mk_apply(&rd, &m, KParam::integer(k)).unwrap();
        let shifted = lam.pair(&(lam + &rd.rho().scale(2 * k)));
        prop_assert_eq!(out.coeff(lam), rat(shifted));
        for w in out.orbit_coefficients().unwrap().keys() {
            prop_assert!(w.dominated_by(lam));
        }
    }
}
