//! Orbits of the affine Weyl group at level `K` and truncated orbit sums.
//!
//! On finite parts the level-`K` action is generated by the simple
//! reflections `s_1, …, s_r` and `s_0 μ = μ − ((μ, θ) − K) θ`. The `p`-degree
//! of `μ̂ = μ + KΛ₀ − dδ` is fixed by the invariant norm
//! `(μ̂, μ̂) = (μ, μ) − 2Kd`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use exact_algebra::weyl::integral_pairing;
use exact_algebra::RatFunc;
use root_data::{RootData, Weight};

use crate::{AffineError, AffineSeries};

fn scaled_norm(mu: &Weight) -> i64 {
    mu.pair_scaled(mu)
}

/// `(μ, μ) − (ν, ν)` over `2K`, which is an integer along an orbit.
pub(crate) fn degree_gap(mu: &Weight, nu: &Weight, level: i64) -> i64 {
    let nn = (mu.n() * mu.n()) as i64;
    let diff = scaled_norm(mu) - scaled_norm(nu);
    debug_assert_eq!(
        diff % (2 * level * nn),
        0,
        "{mu} and {nu} are not in one level-{level} orbit"
    );
    diff / (2 * level * nn)
}

/// The generators `s_0, s_1, …, s_r` applied to `μ`.
fn neighbours(rd: &RootData, mu: &Weight, level: i64) -> Vec<Weight> {
    let mut out: Vec<Weight> = (0..rd.rank()).map(|i| mu.swapped(i, i + 1)).collect();
    let theta = rd.theta();
    out.push(mu - &theta.scale(integral_pairing(theta, mu) - level));
    out
}

/// Whether `μ` lies in the closed fundamental alcove `P⁺_K`.
pub fn in_alcove(rd: &RootData, mu: &Weight, level: i64) -> bool {
    mu.is_dominant() && integral_pairing(rd.theta(), mu) <= level
}

/// Require `K > 0` and `λ ∈ P⁺_K`.
pub fn check_level_dominant(rd: &RootData, lam: &Weight, level: i64) -> Result<(), AffineError> {
    if level <= 0 {
        return Err(AffineError::Unsupported(format!(
            "level K = {level}; only K > 0 is supported"
        )));
    }
    rd.check_dominant_integral(lam)?;
    if integral_pairing(rd.theta(), lam) > level {
        return Err(AffineError::Domain(format!(
            "{lam} has (λ, θ) above the level {level}"
        )));
    }
    Ok(())
}

/// The representative in `P⁺_K` of the orbit of `μ` and the change in
/// `p`-degree, which is never positive.
pub fn alcove_rep(rd: &RootData, mu: &Weight, level: i64) -> (Weight, i64) {
    let theta = rd.theta();
    let mut cur = mu.dominant_rep();
    loop {
        let over = integral_pairing(theta, &cur) - level;
        if over <= 0 {
            break;
        }
        cur = (&cur - &theta.scale(over)).dominant_rep();
    }
    let shift = degree_gap(&cur, mu, level);
    (cur, shift)
}

/// Orbit elements of `ν ∈ P⁺_K` with relative `p`-degree at most
/// `max_degree`, each with its degree and the sign of a group element
/// reaching it (meaningful when `ν` has trivial stabilizer).
///
/// Reduction to the alcove never raises the norm, so a search pruned by
/// the norm bound reaches every element below it.
pub fn orbit_with_degrees(
    rd: &RootData,
    nu: &Weight,
    level: i64,
    max_degree: i64,
) -> Vec<(Weight, i64, i64)> {
    let mut seen: HashMap<Weight, (i64, i64)> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(nu.clone(), (0, 1));
    queue.push_back(nu.clone());
    while let Some(mu) = queue.pop_front() {
        let sign = seen[&mu].1;
        for next in neighbours(rd, &mu, level) {
            if seen.contains_key(&next) {
                continue;
            }
            let d = degree_gap(&next, nu, level);
            if d > max_degree {
                continue;
            }
            seen.insert(next.clone(), (d, -sign));
            queue.push_back(next);
        }
    }
    let mut out: Vec<_> = seen.into_iter().map(|(w, (d, s))| (w, d, s)).collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

/// The orbit sum `m_{λ + KΛ₀}` through `p`-order `order`.
pub fn affine_orbitsum(
    rd: &RootData,
    lam: &Weight,
    level: i64,
    order: i64,
) -> Result<AffineSeries, AffineError> {
    check_level_dominant(rd, lam, level)?;
    let mut out = AffineSeries::zero(rd.n(), level, order);
    for (mu, d, _) in orbit_with_degrees(rd, lam, level, order) {
        out.add_term(mu, d, RatFunc::one());
    }
    Ok(out)
}

/// Coefficients of a level-`K` invariant series on the basis
/// `p^d m_{μ + KΛ₀}`, `μ ∈ P⁺_K`: the coefficient of `e^μ p^d` itself.
pub fn orbit_coefficients(rd: &RootData, f: &AffineSeries) -> BTreeMap<(Weight, i64), RatFunc> {
    f.terms()
        .filter(|(mu, _, _)| in_alcove(rd, mu, f.level()))
        .map(|(mu, d, c)| ((mu.clone(), d), c.clone()))
        .collect()
}

/// `Σ c_{μ,d} p^d m_{μ + KΛ₀}` through `p`-order `order`.
pub fn from_orbit_coefficients(
    rd: &RootData,
    level: i64,
    order: i64,
    coeffs: &BTreeMap<(Weight, i64), RatFunc>,
) -> AffineSeries {
    let mut orbits: BTreeMap<Weight, Vec<(Weight, i64, i64)>> = BTreeMap::new();
    let mut out = AffineSeries::zero(rd.n(), level, order);
    for ((mu, d), c) in coeffs {
        if *d > order {
            continue;
        }
        let orbit = orbits
            .entry(mu.clone())
            .or_insert_with(|| orbit_with_degrees(rd, mu, level, order - d));
        for (w, e, _) in orbit.iter().filter(|(_, e, _)| d + e <= order) {
            out.add_term(w.clone(), d + e, c.clone());
        }
    }
    out
}

/// Check invariance under the affine Weyl group through the truncation.
pub fn check_invariant(rd: &RootData, f: &AffineSeries) -> Result<(), AffineError> {
    if f.level() <= 0 {
        let constant = f.terms().all(|(mu, _, _)| mu.is_zero());
        if f.level() < 0 && !f.is_zero() {
            return Err(AffineError::Domain(
                "invariant series of negative level vanish".into(),
            ));
        }
        if !constant {
            return Err(AffineError::Domain(
                "level-0 invariant series are constants".into(),
            ));
        }
        return Ok(());
    }
    for (mu, _, _) in f.terms() {
        if !mu.in_weight_lattice() {
            return Err(AffineError::Domain(format!("{mu} is not integral")));
        }
    }
    let rebuilt = from_orbit_coefficients(rd, f.level(), f.order(), &orbit_coefficients(rd, f))
        .with_offset(f.offset());
    if rebuilt != *f {
        let bad = f
            .terms()
            .find(|(mu, d, c)| rebuilt.coeff(mu, *d) != **c)
            .map(|(mu, d, _)| format!("e^{mu} p^{d}"))
            .unwrap_or_else(|| "a missing orbit element".into());
        return Err(AffineError::Domain(format!(
            "series is not invariant at {bad}"
        )));
    }
    Ok(())
}
