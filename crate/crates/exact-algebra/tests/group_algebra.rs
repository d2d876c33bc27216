use exact_algebra::weyl::{
    alternating_sum, orbitsum, qdim, weyl_character, weyl_denominator, weyl_inner_product,
};
use exact_algebra::{LatticePoly, Poly, RatFunc};
use num_bigint::BigInt;
use num_rational::Rational64;
use proptest::prelude::*;
use root_data::partitions::partitions;
use root_data::{RootData, Weight};

fn rd(n: usize) -> RootData {
    RootData::build_a_type(n).unwrap()
}

fn w(parts: &[i64]) -> Weight {
    Weight::from_gl(parts)
}

fn q(e: i64) -> RatFunc {
    RatFunc::q_pow(e, 1)
}

#[test]
fn orbitsum_examples() {
    let r2 = rd(2);
    let m0: LatticePoly<Poly> = orbitsum(&r2, &w(&[0, 0])).unwrap();
    assert_eq!(m0, LatticePoly::one(2));
    let m: LatticePoly<Poly> = orbitsum(&r2, &w(&[1, 0])).unwrap();
    assert_eq!(m.len(), 2);
    let m3: LatticePoly<Poly> = orbitsum(&rd(3), &w(&[1, 0, 0])).unwrap();
    assert_eq!(m3.len(), 3);
}

#[test]
fn constant_term_of_denominator_norm() {
    let d: LatticePoly<Poly> = weyl_denominator(&rd(2));
    assert_eq!(d.mul(&d.bar()).constant_term(), Poly::constant(2));
    assert!(LatticePoly::<Poly>::zero(2).constant_term().is_zero());
}

#[test]
fn bar_maps_orbitsum_to_dual() {
    let r = rd(3);
    let lam = w(&[2, 1, 0]);
    let m: LatticePoly<Poly> = orbitsum(&r, &lam).unwrap();
    let dual = (-&lam).dominant_rep();
    assert_eq!(m.bar(), orbitsum(&r, &dual).unwrap());
    assert_eq!(m.bar().bar(), m);
}

#[test]
fn fundamental_character_is_an_orbit() {
    let r = rd(3);
    let ch: LatticePoly<Poly> = weyl_character(&r, &w(&[1, 0, 0])).unwrap();
    assert_eq!(ch, orbitsum(&r, &w(&[1, 0, 0])).unwrap());
}

#[test]
fn characters_times_delta_give_alternating_sums() {
    for n in 2..=4 {
        let r = rd(n);
        let d: LatticePoly<Poly> = weyl_denominator(&r);
        for size in 0..=4 {
            for p in partitions(size, n) {
                let lam = w(&p);
                let ch: LatticePoly<Poly> = weyl_character(&r, &lam).unwrap();
                assert_eq!(ch.mul(&d), alternating_sum(&r, &(&lam + r.rho())));
                // total multiplicity equals the Weyl dimension formula
                let dim: BigInt = ch.terms().map(|(_, c)| c.as_constant().unwrap()).sum();
                let mut expect = Rational64::from(1);
                for alpha in r.positive_roots() {
                    expect *= alpha.pair(&(&lam + r.rho())) / alpha.pair(r.rho());
                }
                assert_eq!(dim, BigInt::from(expect.to_integer()));
            }
        }
    }
}

#[test]
fn evaluation_examples() {
    let r = rd(2);
    let rho = r.rho().clone();
    let one: LatticePoly<Poly> = LatticePoly::one(2);
    assert!(one.to_ratfunc(1).evaluate_at_qpower(&rho).is_one());
    let m: LatticePoly<Poly> = orbitsum(&r, &w(&[1, 0])).unwrap();
    assert_eq!(m.to_ratfunc(1).evaluate_at_qpower(&rho), q(1).add(&q(-1)));
    let ch: LatticePoly<Poly> = weyl_character(&r, &w(&[2, 0])).unwrap();
    assert_eq!(
        ch.to_ratfunc(1).evaluate_at_qpower(&rho),
        q(2).add(&RatFunc::one()).add(&q(-2))
    );
}

#[test]
fn qdim_matches_character_at_rho() {
    for n in 2..=3 {
        let r = rd(n);
        for p in partitions(3, n) {
            let lam = w(&p);
            let ch: LatticePoly<Poly> = weyl_character(&r, &lam).unwrap();
            let at_rho = ch.to_ratfunc(1).evaluate_at_qpower(r.rho());
            assert_eq!(at_rho, qdim(&r, &lam).unwrap(), "lambda = {lam}");
        }
    }
    assert!(qdim(&rd(2), &w(&[0, 0])).unwrap().is_one());
}

#[test]
fn characters_are_orthonormal() {
    for n in 2..=3 {
        let r = rd(n);
        let mut chars = Vec::new();
        for size in 0..=3 {
            for p in partitions(size, n) {
                let ch: LatticePoly<Poly> = weyl_character(&r, &w(&p)).unwrap();
                chars.push((w(&p), ch.to_ratfunc(1)));
            }
        }
        for (a, ca) in &chars {
            for (b, cb) in &chars {
                let ip = weyl_inner_product(&r, ca, cb);
                let expect = if a == b {
                    RatFunc::one()
                } else {
                    RatFunc::zero()
                };
                assert_eq!(ip, expect, "<ch {a}, ch {b}>");
            }
        }
    }
}

#[test]
fn laplacian_eigen_identity_for_delta() {
    for n in 2..=6 {
        let r = rd(n);
        let d: LatticePoly<RatFunc> = weyl_denominator(&r);
        // (ρ, ρ) = n(n² − 1)/12 for sl_n
        let nn = n as i64;
        let rr = RatFunc::from_ratio(nn * (nn * nn - 1), 12).unwrap();
        assert_eq!(d.laplacian(), d.scale(&rr), "n = {n}");
    }
}

fn lattice_strategy() -> impl Strategy<Value = LatticePoly<RatFunc>> {
    prop::collection::vec(((-2i64..3, -2i64..3), -2i64..3, 0i64..3), 0..4).prop_map(|terms| {
        LatticePoly::from_terms(
            3,
            terms.into_iter().map(|((a, b), c, e)| {
                (
                    w(&[a, b, 0]),
                    RatFunc::from_integer(c).mul(&RatFunc::t_pow(e)),
                )
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_multiplicative(f in lattice_strategy(), g in lattice_strategy(), p in 0usize..3) {
        let nu = [w(&[1, 0, 0]), w(&[2, 1, 0]), rd(3).rho().clone()][p].clone();
        let lhs = f.mul(&g).evaluate_at_qpower(&nu);
        let rhs = f.evaluate_at_qpower(&nu).mul(&g.evaluate_at_qpower(&nu));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_is_an_involutive_homomorphism(f in lattice_strategy(), g in lattice_strategy()) {
        prop_assert_eq!(f.bar().bar(), f.clone());
        prop_assert_eq!(f.mul(&g).bar(), f.bar().mul(&g.bar()));
    }

    #[test]
    fn records_round_trip(f in lattice_strategy()) {
        let js = serde_json::to_string(&f.records()).unwrap();
        let recs: Vec<exact_algebra::TermRecord> = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(LatticePoly::from_records(3, &recs).unwrap(), f);
    }
}
