//! Exact checks of the closed-form identities satisfied by `P_λ` at
//! `t = q^k`, each returned as an [`IdentityReport`].

use exact_algebra::weyl::q_number;
use exact_algebra::{IdentityReport, RatFunc};
use root_data::{RootData, Weight};
use serde_json::json;

use crate::operator::macdonald_op_apply;
use crate::{
    check_positive_k, inner, macdonald_eigenvalue, macdonald_poly, MacdonaldError, Mode, Partition,
    SymPoly,
};

fn check_n(rd: &RootData, lam: &Partition) -> Result<(), MacdonaldError> {
    if lam.n() != rd.n() {
        return Err(MacdonaldError::Domain(format!(
            "{lam} does not have {} parts",
            rd.n()
        )));
    }
    Ok(())
}

/// `(α, λ + kρ)` for `α = e_a − e_b`, `a < b`.
fn shifted_pairing(lam: &Partition, k: i64, a: usize, b: usize) -> i64 {
    lam.parts()[a] - lam.parts()[b] + k * (b - a) as i64
}

fn root_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

/// `λ + kρ` as an `sl_n` weight.
fn shifted_weight(rd: &RootData, lam: &Partition, k: i64) -> Weight {
    &lam.weight() + &rd.rho().scale(k)
}

/// `∏_{α>0} ∏_{i=0}^{k−1} [(α, λ + kρ) + i]`.
fn shifted_qproduct(lam: &Partition, k: i64) -> RatFunc {
    let mut acc = RatFunc::one();
    for (a, b) in root_pairs(lam.n()) {
        let x = shifted_pairing(lam, k, a, b);
        for i in 0..k {
            acc = acc.mul(&q_number(x + i));
        }
    }
    acc
}

/// The closed-form norm
/// `∏_{α>0} ∏_{i=1}^{k−1} (1 − q^{2(α,λ+kρ)+2i}) / (1 − q^{2(α,λ+kρ)−2i})`.
pub fn norm_formula(lam: &Partition, k: i64) -> Result<RatFunc, MacdonaldError> {
    check_positive_k(k)?;
    let one = RatFunc::one();
    let mut acc = RatFunc::one();
    for (a, b) in root_pairs(lam.n()) {
        let x = shifted_pairing(lam, k, a, b);
        for i in 1..k {
            let num = one.sub(&RatFunc::q_pow(2 * x + 2 * i, 1));
            let den = one.sub(&RatFunc::q_pow(2 * x - 2 * i, 1));
            acc = acc.mul(&num.div(&den)?);
        }
    }
    Ok(acc)
}

/// `⟨P_λ, P_λ⟩_k` against its product formula.
pub fn verify_norm(
    rd: &RootData,
    lam: &Partition,
    k: i64,
) -> Result<IdentityReport, MacdonaldError> {
    check_n(rd, lam)?;
    check_positive_k(k)?;
    let p = macdonald_poly(rd, lam, Mode::TEqQk(k))?;
    let lhs = inner::sym_inner_product(rd, &p.coeffs, &p.coeffs, k)?;
    let rhs = norm_formula(lam, k)?;
    Ok(IdentityReport::compare(
        "norm",
        json!({"n": rd.n(), "lambda": lam, "k": k}),
        &lhs,
        &rhs,
    ))
}

/// `⟨P_λ, P_μ⟩_k = 0` for `λ ≠ μ`.
pub fn verify_orthogonality(
    rd: &RootData,
    lam: &Partition,
    mu: &Partition,
    k: i64,
) -> Result<IdentityReport, MacdonaldError> {
    check_n(rd, lam)?;
    check_n(rd, mu)?;
    if lam == mu {
        return Err(MacdonaldError::Domain(
            "orthogonality needs two distinct partitions".into(),
        ));
    }
    let p = macdonald_poly(rd, lam, Mode::TEqQk(k))?;
    let r = macdonald_poly(rd, mu, Mode::TEqQk(k))?;
    let lhs = inner::sym_inner_product(rd, &p.coeffs, &r.coeffs, k)?;
    Ok(IdentityReport::compare(
        "orthogonality",
        json!({"n": rd.n(), "lambda": lam, "mu": mu, "k": k}),
        &lhs,
        &RatFunc::zero(),
    ))
}

/// `P_μ(q^{2(λ+kρ)}) / P_λ(q^{2(μ+kρ)})` against
/// `∏_{α>0} ∏_{i=0}^{k−1} [(α, μ+kρ) + i] / [(α, λ+kρ) + i]`.
pub fn verify_symmetry(
    rd: &RootData,
    lam: &Partition,
    mu: &Partition,
    k: i64,
) -> Result<IdentityReport, MacdonaldError> {
    check_n(rd, lam)?;
    check_n(rd, mu)?;
    check_positive_k(k)?;
    let inputs = json!({"n": rd.n(), "lambda": lam, "mu": mu, "k": k});
    let p_lam = macdonald_poly(rd, lam, Mode::TEqQk(k))?.to_lattice(rd);
    let p_mu = macdonald_poly(rd, mu, Mode::TEqQk(k))?.to_lattice(rd);
    let top = p_mu.evaluate_at_qpower(&shifted_weight(rd, lam, k));
    let bottom = p_lam.evaluate_at_qpower(&shifted_weight(rd, mu, k));
    if bottom.is_zero() {
        return Ok(IdentityReport::inconclusive(
            "symmetry",
            inputs,
            "P_lambda vanishes at q^(2(mu+k rho))",
        ));
    }
    let lhs = top.div(&bottom)?;
    let rhs = shifted_qproduct(mu, k).div(&shifted_qproduct(lam, k))?;
    Ok(IdentityReport::compare("symmetry", inputs, &lhs, &rhs))
}

/// `P_λ(q^{2kρ}) = ∏_{α>0} ∏_{i=0}^{k−1} [(α, λ+kρ) + i] / [(α, kρ) + i]`.
pub fn verify_special_value(
    rd: &RootData,
    lam: &Partition,
    k: i64,
) -> Result<IdentityReport, MacdonaldError> {
    check_n(rd, lam)?;
    check_positive_k(k)?;
    let p = macdonald_poly(rd, lam, Mode::TEqQk(k))?.to_lattice(rd);
    let lhs = p.evaluate_at_qpower(&rd.rho().scale(k));
    let rhs = shifted_qproduct(lam, k).div(&shifted_qproduct(&Partition::zero(rd.n()), k))?;
    Ok(IdentityReport::compare(
        "special_value",
        json!({"n": rd.n(), "lambda": lam, "k": k}),
        &lhs,
        &rhs,
    ))
}

/// `M_r P_λ = c_λ^r P_λ`.
pub fn verify_eigen(
    rd: &RootData,
    lam: &Partition,
    r: usize,
    mode: Mode,
) -> Result<IdentityReport, MacdonaldError> {
    check_n(rd, lam)?;
    let p = macdonald_poly(rd, lam, mode)?;
    let lhs = macdonald_op_apply(rd, r, &p.coeffs, mode)?;
    let c = macdonald_eigenvalue(rd, r, lam, mode)?;
    let rhs: SymPoly = p
        .coeffs
        .iter()
        .map(|(mu, a)| (mu.clone(), a.mul(&c)))
        .collect();
    Ok(IdentityReport::compare(
        "eigen",
        json!({"n": rd.n(), "lambda": lam, "r": r, "mode": mode.to_string()}),
        &SymText(lhs),
        &SymText(rhs),
    ))
}

/// `M_r M_s m_μ = M_s M_r m_μ`.
pub fn verify_commutativity(
    rd: &RootData,
    r: usize,
    s: usize,
    mu: &Partition,
    mode: Mode,
) -> Result<IdentityReport, MacdonaldError> {
    check_n(rd, mu)?;
    let m: SymPoly = [(mu.clone(), RatFunc::one())].into_iter().collect();
    let rs = macdonald_op_apply(rd, r, &macdonald_op_apply(rd, s, &m, mode)?, mode)?;
    let sr = macdonald_op_apply(rd, s, &macdonald_op_apply(rd, r, &m, mode)?, mode)?;
    Ok(IdentityReport::compare(
        "commutativity",
        json!({"n": rd.n(), "r": r, "s": s, "mu": mu, "mode": mode.to_string()}),
        &SymText(rs),
        &SymText(sr),
    ))
}

/// Display wrapper that prints a symmetric polynomial as `Σ c m_μ`.
#[derive(PartialEq)]
struct SymText(SymPoly);

impl std::fmt::Display for SymText {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*m{mu}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_formula_trivial_at_k_one() {
        let lam = Partition::new(&[3, 1], 3).unwrap();
        assert!(norm_formula(&lam, 1).unwrap().is_one());
    }

    #[test]
    fn sl2_norm_by_hand() {
        // n = 2, λ = 0, k = 2: (α, kρ) = 2, single factor (1 − q^6)/(1 − q^2).
        let expect = RatFunc::one()
            .sub(&RatFunc::q_pow(6, 1))
            .div(&RatFunc::one().sub(&RatFunc::q_pow(2, 1)))
            .unwrap();
        assert_eq!(norm_formula(&Partition::zero(2), 2).unwrap(), expect);
    }
}
