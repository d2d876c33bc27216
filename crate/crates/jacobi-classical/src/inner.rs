//! The classical inner product `⟨f, g⟩_k = (1/|W|) [f δ^k · bar(g δ^k)]₀`.

use exact_algebra::weyl::weyl_denominator;
use exact_algebra::{LatticePoly, Poly, RatFunc};
use root_data::RootData;

use crate::JacobiError;

/// `⟨f, g⟩_k` for a nonnegative integer `k`.
pub fn classical_inner_product(
    rd: &RootData,
    f: &LatticePoly<RatFunc>,
    g: &LatticePoly<RatFunc>,
    k: i64,
) -> Result<RatFunc, JacobiError> {
    if k < 0 {
        return Err(JacobiError::Domain(format!(
            "the inner product needs k >= 0, got {k}"
        )));
    }
    let delta: LatticePoly<Poly> = weyl_denominator(rd);
    let dk = delta.pow(k as u32);
    let kernel = dk.mul(&dk.bar()).to_ratfunc(1);
    let ct = f.mul(&g.bar()).mul(&kernel).constant_term();
    Ok(ct.div(&RatFunc::from_integer(rd.weyl_order()))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_norms() {
        let rd = RootData::build_a_type(2).unwrap();
        let one = LatticePoly::<RatFunc>::one(2);
        // The k = 0 form is (1/|W|)[f bar(g)]_0, so the constant 1 has norm 1/2.
        assert_eq!(
            classical_inner_product(&rd, &one, &one, 0).unwrap(),
            RatFunc::from_ratio(1, 2).unwrap()
        );
        assert!(classical_inner_product(&rd, &one, &one, 1)
            .unwrap()
            .is_one());
        assert!(classical_inner_product(&rd, &one, &one, -1).is_err());
    }
}
