//! The acceptance run: one PASS/FAIL line per criterion.
//!
//! Exact criteria compare with `==` on exact values. Numeric criteria use
//! the tolerances pinned in [`TOL`], and criteria with a time budget fail
//! when they overrun it.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use acceptance::{integer_vectors, inverse_euler_power, kostka};
use affine_jacobi::{
    affine_jacobi, mhat_apply, normalized_denominator, weyl_kac_character, AffineSeries,
};
use elliptic_kz::checks::{
    closed_form_suite, flatness_suite, identity_suite, r_matrix_suite, theta_law_suite,
    FLATNESS_SAMPLES,
};
use elliptic_kz::{CheckReport, Tolerances};
use exact_algebra::{IdentityReport, LatticePoly, RatFunc};
use jacobi_classical::{jacobi_poly, KParam};
use macdonald_core::verify::{
    verify_commutativity, verify_eigen, verify_norm, verify_orthogonality, verify_special_value,
    verify_symmetry,
};
use macdonald_core::{
    macdonald_op_apply, macdonald_poly, sym_inner_product, Mode, Partition, SymPoly,
};
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use root_data::{RootData, Weight};

/// Numeric tolerances of the elliptic criteria.
const TOL: Tolerances = Tolerances {
    identity: 1e-10,
    unitarity: 1e-10,
    residue: 1e-6,
    quasi_periodicity: 1e-8,
    weight_preservation: 1e-12,
    psi_period: 1e-10,
    psi_tau: 1e-8,
    closed_form: 1e-8,
    theta_law: 1e-7,
    flatness: 1e-5,
    fd_step: 1e-4,
};

/// Truncation order of the affine comparisons.
const AFFINE_ORDER: i64 = 8;
/// Truncation order of the harmonicity check of the normalized denominator.
const DENOMINATOR_ORDER: i64 = 12;
/// Truncation order of the closed-form and theta-law evaluations.
const FUNCTIONAL_ORDER: i64 = 12;
/// Random symmetric pairs per `(n, k)` in the self-adjointness check.
const ADJOINT_PAIRS: usize = 20;

const MINUTE: Duration = Duration::from_secs(60);

type Verdict = Result<String, String>;

fn rd(n: usize) -> RootData {
    RootData::build_a_type(n).expect("type A root data")
}

fn fail<T>(what: impl std::fmt::Display) -> Result<T, String> {
    Err(what.to_string())
}

/// Count reports, failing on the first one that is neither equal nor
/// inconclusive. Returns `(checked, inconclusive)`.
fn tally(
    reports: impl IntoIterator<Item = Result<IdentityReport, String>>,
) -> Result<(usize, usize), String> {
    let (mut checked, mut skipped) = (0, 0);
    for rep in reports {
        let rep = rep?;
        if rep.inconclusive {
            skipped += 1;
        } else if !rep.equal {
            return fail(format!(
                "{} fails at {}: {} != {}",
                rep.identity, rep.inputs, rep.lhs, rep.rhs
            ));
        }
        checked += 1;
    }
    Ok((checked, skipped))
}

fn numeric(reports: Vec<CheckReport>) -> Verdict {
    let mut lines = Vec::new();
    let mut bad = Vec::new();
    for r in &reports {
        lines.push(format!(
            "{} {:.1e}/{:.0e}",
            r.check, r.max_residual, r.tolerance
        ));
        if !r.pass {
            bad.push(r.check.clone());
        }
    }
    if bad.is_empty() {
        Ok(lines.join(", "))
    } else {
        fail(format!("failing: {}; {}", bad.join(", "), lines.join(", ")))
    }
}

fn pairs(parts: &[Partition]) -> impl Iterator<Item = (&Partition, &Partition)> {
    parts
        .iter()
        .enumerate()
        .flat_map(move |(i, a)| parts[i + 1..].iter().map(move |b| (a, b)))
}

/// `P_λ` at `k = 0` is `m_λ`; at `k = 1` its coefficients are Kostka numbers.
fn specializations() -> Verdict {
    let mut count = 0;
    for n in 2..=4 {
        let rd = rd(n);
        let all = Partition::all_up_to(n, 5);
        for lam in &all {
            let p0 = macdonald_poly(&rd, lam, Mode::TEqQk(0)).map_err(|e| e.to_string())?;
            let m: SymPoly = [(lam.clone(), RatFunc::one())].into_iter().collect();
            if p0.coeffs != m {
                return fail(format!("P{lam} at k = 0 is not m{lam}"));
            }
            let p1 = macdonald_poly(&rd, lam, Mode::TEqQk(1)).map_err(|e| e.to_string())?;
            for mu in all.iter().filter(|mu| mu.size() == lam.size()) {
                let expect = RatFunc::from_integer(kostka(lam.parts(), mu.parts()));
                if p1.coeff(mu) != expect {
                    return fail(format!(
                        "coefficient of m{mu} in P{lam} at k = 1 is {}",
                        p1.coeff(mu)
                    ));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} partitions over n = 2, 3, 4"))
}

fn orthogonality() -> Verdict {
    let mut reports = Vec::new();
    for n in 2..=3 {
        let rd = rd(n);
        let all = Partition::all_up_to(n, 4);
        for k in 1..=3 {
            for (a, b) in pairs(&all) {
                reports.push(verify_orthogonality(&rd, a, b, k).map_err(|e| e.to_string()));
            }
        }
    }
    let (checked, _) = tally(reports)?;
    Ok(format!("{checked} pairs"))
}

fn norms() -> Verdict {
    let mut reports = Vec::new();
    for n in 2..=3 {
        let rd = rd(n);
        for k in 2..=3 {
            for lam in Partition::all_up_to(n, 4) {
                reports.push(verify_norm(&rd, &lam, k).map_err(|e| e.to_string()));
            }
        }
    }
    let (checked, _) = tally(reports)?;
    Ok(format!("{checked} norms"))
}

fn symmetry_and_special_value() -> Verdict {
    let mut sym = Vec::new();
    let mut special = Vec::new();
    for n in 2..=3 {
        let rd = rd(n);
        let all = Partition::all_up_to(n, 4);
        for k in 2..=3 {
            for lam in &all {
                special.push(verify_special_value(&rd, lam, k).map_err(|e| e.to_string()));
                for mu in &all {
                    sym.push(verify_symmetry(&rd, lam, mu, k).map_err(|e| e.to_string()));
                }
            }
        }
    }
    let (sym_checked, sym_skipped) = tally(sym)?;
    let (sv_checked, sv_skipped) = tally(special)?;
    Ok(format!(
        "symmetry {sym_checked} ({sym_skipped} skipped), special value {sv_checked} ({sv_skipped} skipped)"
    ))
}

fn random_sym(rng: &mut StdRng, basis: &[Partition]) -> SymPoly {
    basis
        .iter()
        .filter_map(|p| {
            let c = rng.gen_range(-3i64..=3);
            (c != 0).then(|| (p.clone(), RatFunc::from_integer(c)))
        })
        .collect()
}

fn operator_algebra() -> Verdict {
    let mut commuting = Vec::new();
    let mut eigen = Vec::new();
    let mut adjoint = 0;
    for n in 2..=3 {
        let rd = rd(n);
        let all = Partition::all_up_to(n, 4);
        for mu in &all {
            for r in 1..=n {
                for s in r + 1..=n {
                    commuting.push(
                        verify_commutativity(&rd, r, s, mu, Mode::Generic)
                            .map_err(|e| e.to_string()),
                    );
                }
                for mode in [
                    Mode::Generic,
                    Mode::TEqQk(1),
                    Mode::TEqQk(2),
                    Mode::TEqQk(3),
                ] {
                    eigen.push(verify_eigen(&rd, mu, r, mode).map_err(|e| e.to_string()));
                }
            }
        }
        let small = Partition::all_up_to(n, 3);
        for k in 1..=3 {
            let mode = Mode::TEqQk(k);
            let mut rng = StdRng::seed_from_u64(1000 * n as u64 + k as u64);
            for _ in 0..ADJOINT_PAIRS {
                let f = random_sym(&mut rng, &small);
                let g = random_sym(&mut rng, &small);
                for r in 1..=n {
                    let mf = macdonald_op_apply(&rd, r, &f, mode).map_err(|e| e.to_string())?;
                    let mg = macdonald_op_apply(&rd, r, &g, mode).map_err(|e| e.to_string())?;
                    let lhs = sym_inner_product(&rd, &mf, &g, k).map_err(|e| e.to_string())?;
                    let rhs = sym_inner_product(&rd, &f, &mg, k).map_err(|e| e.to_string())?;
                    if lhs != rhs {
                        return fail(format!(
                            "M_{r} is not self-adjoint at n = {n}, k = {k}: {lhs} != {rhs}"
                        ));
                    }
                    adjoint += 1;
                }
            }
        }
    }
    let (c, _) = tally(commuting)?;
    let (e, _) = tally(eigen)?;
    Ok(format!(
        "{c} commutators, {e} eigen-equations, {adjoint} adjoint pairs"
    ))
}

fn jack_bridge() -> Verdict {
    let mut count = 0;
    for n in 2..=3 {
        let rd = rd(n);
        for lam in Partition::all_up_to(n, 4) {
            for k in 1..=3 {
                let p = macdonald_poly(&rd, &lam, Mode::TEqQk(k)).map_err(|e| e.to_string())?;
                let mut limit = BTreeMap::new();
                for (mu, c) in &p.coeffs {
                    let l = c.limit_q_to_one().map_err(|e| e.to_string())?;
                    if !l.is_zero() {
                        limit.insert(mu.weight(), l);
                    }
                }
                let j = jacobi_poly(&rd, &lam.weight(), KParam::integer(k))
                    .map_err(|e| e.to_string())?;
                if j.coeffs != limit {
                    return fail(format!("q -> 1 limit of P{lam} differs from J at k = {k}"));
                }
                count += 1;
            }
        }
    }
    let rd2 = rd(2);
    let two_omega = Weight::from_gl(&[2, 0]);
    let ks = [(1, 1), (2, 1), (3, 1), (1, 2), (7, 3)];
    for (a, b) in ks {
        let j = jacobi_poly(&rd2, &two_omega, KParam::Value(Rational64::new(a, b)))
            .map_err(|e| e.to_string())?;
        // 2k/(k+1) with k = a/b.
        let expect = RatFunc::from_ratio(2 * a, a + b).map_err(|e| e.to_string())?;
        if j.coeffs.len() != 2
            || !j.coeff(&two_omega).is_one()
            || j.coeff(&Weight::zero(2)) != expect
        {
            return fail(format!(
                "J_(2 omega) at k = {a}/{b} has coefficients {:?}",
                j.coeffs
            ));
        }
    }
    Ok(format!(
        "{count} limits, J_(2 omega) closed form at {} values of k",
        ks.len()
    ))
}

fn classical_denominator() -> Verdict {
    for n in 2..=6 {
        let rd = rd(n);
        let zero = Weight::zero(n);
        let mut delta = LatticePoly::monomial(rd.rho().clone(), RatFunc::one());
        for alpha in rd.positive_roots() {
            delta = delta.mul(&LatticePoly::from_terms(
                n,
                [
                    (zero.clone(), RatFunc::one()),
                    (-alpha, RatFunc::from_integer(-1)),
                ],
            ));
        }
        let m = n as i64;
        // (ρ, ρ) = n(n² − 1)/12 in type A_{n−1}.
        let rho2 = RatFunc::from_ratio(m * (m * m - 1), 12).map_err(|e| e.to_string())?;
        let factorial: usize = (1..=n).product();
        if delta.len() != factorial || delta.laplacian() != delta.scale(&rho2) {
            return fail(format!("Laplacian of the denominator at n = {n}"));
        }
    }
    for n in 2..=8 {
        let rd = rd(n);
        let sum: Rational64 = rd.positive_roots().iter().map(|a| a.norm2()).sum();
        let expect = Rational64::from_integer((n as i64 - 1) * n as i64);
        if sum != expect || rd.sum_root_norms() != expect {
            return fail(format!("sum of root norms at n = {n} is {sum}"));
        }
    }
    Ok("Laplacian for n <= 6, root norms for n <= 8".into())
}

/// The level-1 character of `ω_i` from the lattice construction:
/// `Σ_{μ ∈ ω_i + Q} e^μ p^{((μ,μ) − (ω_i,ω_i))/2} / φ(p)^r`.
fn lattice_character(n: usize, i: usize, order: i64) -> BTreeMap<(Weight, i64), RatFunc> {
    let omega = Weight::from_gl(&(0..n).map(|j| i64::from(j < i)).collect::<Vec<_>>());
    let euler = inverse_euler_power(n - 1, order as usize);
    let bound = (2.0 * order as f64 + 2.0).sqrt().ceil() as i64 + 1;
    let mut out: BTreeMap<(Weight, i64), RatFunc> = BTreeMap::new();
    for x in integer_vectors(n, i as i64, bound) {
        let mu = Weight::from_gl(&x);
        let d0 = ((mu.norm2() - omega.norm2()) / 2).to_integer();
        for (j, &c) in euler.iter().enumerate() {
            let d = d0 + j as i64;
            if d > order || c == 0 {
                continue;
            }
            let slot = out.entry((mu.clone(), d)).or_insert_with(RatFunc::zero);
            *slot = slot.add(&RatFunc::from_integer(c));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn series_map(f: &AffineSeries) -> BTreeMap<(Weight, i64), RatFunc> {
    f.terms()
        .map(|(mu, d, c)| ((mu.clone(), d), c.clone()))
        .collect()
}

const AFFINE_RANGE: [(usize, i64); 3] = [(2, 1), (2, 2), (3, 1)];

fn affine_k1() -> Verdict {
    let mut count = 0;
    for (n, level) in AFFINE_RANGE {
        let rd = rd(n);
        for lam in rd.dominant_of_level(level) {
            let j = affine_jacobi(&rd, &lam, level, KParam::integer(1), AFFINE_ORDER)
                .map_err(|e| e.to_string())?;
            let ch =
                weyl_kac_character(&rd, &lam, level, AFFINE_ORDER).map_err(|e| e.to_string())?;
            for d in 0..=AFFINE_ORDER {
                if j.series.layer(d) != ch.layer(d) {
                    return fail(format!(
                        "sl{n}, K = {level}, lambda = {lam}: layer p^{d} differs"
                    ));
                }
            }
            count += 1;
        }
    }
    for n in 2..=3 {
        let rd = rd(n);
        for i in 0..n {
            let omega = Weight::from_gl(&(0..n).map(|j| i64::from(j < i)).collect::<Vec<_>>());
            let ch = weyl_kac_character(&rd, &omega, 1, AFFINE_ORDER).map_err(|e| e.to_string())?;
            if series_map(&ch) != lattice_character(n, i, AFFINE_ORDER) {
                return fail(format!(
                    "sl{n} level-1 character of omega_{i} differs from the lattice sum"
                ));
            }
        }
    }
    Ok(format!(
        "{count} weights through p^{AFFINE_ORDER}, level-1 lattice sums agree"
    ))
}

fn affine_residuals() -> Verdict {
    let mut count = 0;
    for (n, level) in AFFINE_RANGE {
        let rd = rd(n);
        for k in 2..=3 {
            for lam in rd.dominant_of_level(level) {
                let j = affine_jacobi(&rd, &lam, level, KParam::integer(k), AFFINE_ORDER)
                    .map_err(|e| e.to_string())?;
                let image = mhat_apply(&rd, &j.series, j.k).map_err(|e| e.to_string())?;
                let residual = image
                    .sub(&j.series.scale(&j.eigenvalue(&rd)))
                    .map_err(|e| e.to_string())?;
                if !residual.is_zero() {
                    return fail(format!(
                        "sl{n}, K = {level}, k = {k}, lambda = {lam}: nonzero residual"
                    ));
                }
                count += 1;
            }
        }
    }
    for n in 2..=3 {
        let d = normalized_denominator(&rd(n), DENOMINATOR_ORDER);
        if d.is_empty() || !d.laplacian_hat().is_zero() {
            return fail(format!(
                "normalized denominator of sl{n} is not harmonic through p^{DENOMINATOR_ORDER}"
            ));
        }
    }
    Ok(format!("{count} residuals through p^{AFFINE_ORDER}, harmonic denominator through p^{DENOMINATOR_ORDER}"))
}

fn functional_bridge() -> Verdict {
    let mut reports = closed_form_suite(FUNCTIONAL_ORDER, &TOL).map_err(|e| e.to_string())?;
    reports.extend(theta_law_suite(FUNCTIONAL_ORDER, &TOL).map_err(|e| e.to_string())?);
    numeric(reports)
}

fn elliptic_identities() -> Verdict {
    numeric(identity_suite(&TOL).map_err(|e| e.to_string())?)
}

fn r_matrix() -> Verdict {
    let mut reports = r_matrix_suite(2, &TOL).map_err(|e| e.to_string())?;
    reports.extend(r_matrix_suite(3, &TOL).map_err(|e| e.to_string())?);
    numeric(reports)
}

fn kz_flatness() -> Verdict {
    numeric(flatness_suite(&FLATNESS_SAMPLES, &TOL).map_err(|e| e.to_string())?)
}

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Verdict,
}

const CRITERIA: [Criterion; 13] = [
    Criterion {
        id: 1,
        name: "specialization k = 0, 1",
        budget: Some(MINUTE),
        run: specializations,
    },
    Criterion {
        id: 2,
        name: "orthogonality",
        budget: None,
        run: orthogonality,
    },
    Criterion {
        id: 3,
        name: "norm identity",
        budget: Some(Duration::from_secs(5 * 60)),
        run: norms,
    },
    Criterion {
        id: 4,
        name: "symmetry and special value",
        budget: None,
        run: symmetry_and_special_value,
    },
    Criterion {
        id: 5,
        name: "operator algebra",
        budget: None,
        run: operator_algebra,
    },
    Criterion {
        id: 6,
        name: "Jack bridge",
        budget: None,
        run: jack_bridge,
    },
    Criterion {
        id: 7,
        name: "classical denominator",
        budget: None,
        run: classical_denominator,
    },
    Criterion {
        id: 8,
        name: "affine k = 1 against Weyl-Kac",
        budget: Some(Duration::from_secs(10 * 60)),
        run: affine_k1,
    },
    Criterion {
        id: 9,
        name: "affine eigen-residual",
        budget: None,
        run: affine_residuals,
    },
    Criterion {
        id: 10,
        name: "functional bridge",
        budget: None,
        run: functional_bridge,
    },
    Criterion {
        id: 11,
        name: "elliptic identities",
        budget: Some(MINUTE),
        run: elliptic_identities,
    },
    Criterion {
        id: 12,
        name: "r-matrix structure",
        budget: None,
        run: r_matrix,
    },
    Criterion {
        id: 13,
        name: "KZ flatness",
        budget: None,
        run: kz_flatness,
    },
];

fn main() {
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let verdict = match (verdict, c.budget) {
            (Ok(_), Some(budget)) if elapsed > budget => {
                Err(format!("over the {} s budget", budget.as_secs()))
            }
            (v, _) => v,
        };
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "{tag} {:>2} {} [{:.3} s]: {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        CRITERIA.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
