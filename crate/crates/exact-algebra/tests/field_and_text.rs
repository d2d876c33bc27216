use exact_algebra::{Poly, RatFunc, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((-2i64..3, 0i64..3), -3i64..4), 0..4).prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|((a, b), c)| ([a, b, 0], BigInt::from(c))),
        )
    })
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    (poly_strategy(), poly_strategy(), 1i64..3)
        .prop_filter_map("nonzero denominator", |(n, d, qd)| {
            RatFunc::new(n, d, qd).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_is_associative(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn distributivity(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn inverse_and_subtraction(a in ratfunc_strategy()) {
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.div(&a).unwrap().is_one());
        }
    }

    #[test]
    fn text_round_trip(a in ratfunc_strategy()) {
        let s = a.to_string();
        let back: RatFunc = s.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), s);
    }

    #[test]
    fn json_round_trip(a in ratfunc_strategy()) {
        let js = serde_json::to_string(&a).unwrap();
        let back: RatFunc = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn t_substitution_is_a_homomorphism(a in ratfunc_strategy(), b in ratfunc_strategy(), s in 0i64..3) {
        if let (Ok(sa), Ok(sb)) = (a.subs_t_qpow(s), b.subs_t_qpow(s)) {
            prop_assert_eq!(a.mul(&b).subs_t_qpow(s).unwrap(), sa.mul(&sb));
        }
    }
}

#[test]
fn canonical_form_examples() {
    let a: RatFunc = "(1 - q^2)/(1 - q)".parse().unwrap();
    assert_eq!(a.to_string(), "(1 + q)");
    let q = RatFunc::q_pow(1, 1);
    assert!(q.mul(&q.inv().unwrap()).is_one());
    let b: RatFunc = "(1 - t^2)/(1 - q^2*t^2)".parse().unwrap();
    let expect: RatFunc = "(1 - q^4)/(1 - q^6)".parse().unwrap();
    assert_eq!(b.subs_t_qpow(2).unwrap(), expect);
    assert_eq!(expect.to_string(), "(1 + q^2)/(1 + q^2 + q^4)");
}

#[test]
fn gcd_of_three_variable_polynomials() {
    let q = Poly::var_pow(Var::Q, 1);
    let t = Poly::var_pow(Var::T, 1);
    let k = Poly::var_pow(Var::K, 1);
    let common = q.mul(&k).sub(&t.pow(2));
    let a = common.mul(&q.add(&k));
    let b = common.mul(&t.sub(&Poly::one()));
    let g = exact_algebra::gcd(&a, &b);
    assert!(g == common || g == common.neg());
}
