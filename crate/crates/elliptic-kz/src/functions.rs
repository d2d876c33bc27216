//! Theta, eta, sigma, Weierstrass and the kernels `g`, `φ`, `φ₀`.
//!
//! The primary evaluators go through the product for `θ₁` and are valid on
//! all of `ℂ` away from poles. The `*_series` functions sum the
//! corresponding `p`-series and serve as independent cross-checks.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::context::{e2pi, EllipticContext};
use crate::EllipticError;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn two_pi_i() -> Complex64 {
    Complex64::new(0.0, 2.0 * PI)
}

/// `θ₁(x)`, `θ₁'(x)` and `θ₁''(x)` from the product, differentiated
/// factor by factor so that no division occurs.
pub fn theta1_jet(x: Complex64, ctx: &EllipticContext) -> Result<[Complex64; 3], EllipticError> {
    let p = ctx.p();
    let z = e2pi(x);
    let zi = z.inv();
    let tpi = two_pi_i();
    let (mut f0, mut f1, mut f2) = (c(1.0), c(0.0), c(0.0));
    let mut pn = c(1.0);
    let mut quiet = 0;
    for _ in 0..ctx.max_terms() {
        pn *= p;
        let (u, v) = (z * pn, zi * pn);
        let scale = c(1.0) - pn;
        let g0 = scale * (c(1.0) - u) * (c(1.0) - v);
        let g1 = -scale * tpi * (u - v);
        let g2 = -scale * tpi * tpi * (u + v);
        let next = (
            f0 * g0,
            f1 * g0 + f0 * g1,
            f2 * g0 + c(2.0) * f1 * g1 + f0 * g2,
        );
        (f0, f1, f2) = next;
        if u.norm() + v.norm() + pn.norm() <= ctx.series_tolerance() {
            quiet += 1;
            if quiet == 2 {
                let s = (x * PI).sin();
                let s1 = (x * PI).cos() * PI;
                let s2 = -s * PI * PI;
                let pre = ctx.p_pow(0.125) * 2.0;
                return Ok([
                    pre * s * f0,
                    pre * (s1 * f0 + s * f1),
                    pre * (s2 * f0 + c(2.0) * s1 * f1 + s * f2),
                ]);
            }
        } else {
            quiet = 0;
        }
        if !f0.is_finite() {
            break;
        }
    }
    Err(EllipticError::Convergence(format!("θ₁ product at x = {x}")))
}

/// `θ₁(x) = 2p^{1/8} sin πx ∏_{n≥1} (1 − e^{2πix}pⁿ)(1 − e^{−2πix}pⁿ)(1 − pⁿ)`.
pub fn theta1(x: Complex64, ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    Ok(theta1_jet(x, ctx)?[0])
}

fn euler_sum(
    ctx: &EllipticContext,
    what: &'static str,
    f: impl Fn(Complex64) -> Complex64,
) -> Result<Complex64, EllipticError> {
    let p = ctx.p();
    ctx.sum_series(what, 1, |n| f(p.powi(n as i32)))
}

fn euler_product(ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    let log = euler_sum(ctx, "φ(p)", |pn| (c(1.0) - pn).ln())?;
    Ok(log.exp())
}

/// `η = p^{1/24} ∏_{n≥1} (1 − pⁿ)`.
pub fn eta(ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    Ok(ctx.p_pow(1.0 / 24.0) * euler_product(ctx)?)
}

/// `θ₁'(0) = 2π p^{1/8} ∏ (1 − pⁿ)³`.
pub fn theta1_prime_zero(ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    Ok(ctx.p_pow(0.125) * 2.0 * PI * euler_product(ctx)?.powi(3))
}

/// `θ₁'''(0)/θ₁'(0) = −π² + 24π² Σ_{n≥1} pⁿ/(1 − pⁿ)²`, read off the
/// `x³` term of the product.
pub fn theta1_third_ratio(ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    let s = euler_sum(ctx, "θ₁'''(0)", |pn| {
        pn / ((c(1.0) - pn) * (c(1.0) - pn))
    })?;
    Ok(c(-PI * PI) + s * (24.0 * PI * PI))
}

/// `σ(x) = −(1/2πi) θ₁'(x)/θ₁(x)`.
pub fn sigma(x: Complex64, ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    ctx.check_pole("sigma", x)?;
    let [t0, t1, _] = theta1_jet(x, ctx)?;
    Ok(-t1 / (t0 * two_pi_i()))
}

/// `Σ_{n≥0} pⁿz/(1 − pⁿz) + Σ_{n<0} 1/(1 − pⁿz) + 1/2` with `z = e^{2πix}`.
pub fn sigma_series(x: Complex64, ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    ctx.check_pole("sigma", x)?;
    let p = ctx.p();
    let z = e2pi(x);
    let zi = z.inv();
    let tail = ctx.sum_series("σ series", 1, |n| {
        let pn = p.powi(n as i32);
        pn * z / (c(1.0) - pn * z) - pn * zi / (c(1.0) - pn * zi)
    })?;
    Ok(z / (c(1.0) - z) + tail + 0.5)
}

/// `½ V.P. Σ_{m∈ℤ} (1 + pᵐy)/(1 − pᵐy)` with `y = e^{2πiζ}`, summed over
/// symmetric windows `−M..M`.
pub fn sigma_principal_value(
    zeta: Complex64,
    ctx: &EllipticContext,
) -> Result<Complex64, EllipticError> {
    ctx.check_pole("sigma", zeta)?;
    let p = ctx.p();
    let y = e2pi(zeta);
    let t0 = (c(1.0) + y) / (c(1.0) - y);
    let rest = ctx.sum_series("σ principal value", 1, |m| {
        let pm = p.powi(m as i32);
        (c(1.0) + pm * y) / (c(1.0) - pm * y) + (pm + y) / (pm - y)
    })?;
    Ok((t0 + rest) * 0.5)
}

fn check_strip(
    what: &'static str,
    zeta: Complex64,
    ctx: &EllipticContext,
) -> Result<Complex64, EllipticError> {
    let y = e2pi(zeta);
    let p = ctx.p().norm();
    if !(y.norm() > p && y.norm() < 1.0 / p) {
        return Err(EllipticError::Domain(format!(
            "{what}: the series needs |Im ζ| < Im τ, got ζ = {zeta}"
        )));
    }
    Ok(y)
}

/// `Σ_{m≠0} e^{2πimζ}/(1 − pᵐ)`, with the `m > 0` geometric part summed in
/// closed form so that real `ζ` is allowed.
pub fn sigma_shifted_series(
    zeta: Complex64,
    ctx: &EllipticContext,
) -> Result<Complex64, EllipticError> {
    ctx.check_pole("sigma", zeta)?;
    let y = check_strip("shifted σ series", zeta, ctx)?;
    let yi = y.inv();
    let p = ctx.p();
    let tail = ctx.sum_series("shifted σ series", 1, |m| {
        let pm = p.powi(m as i32);
        (y.powi(m as i32) - yi.powi(m as i32)) * pm / (c(1.0) - pm)
    })?;
    Ok(y / (c(1.0) - y) + tail)
}

/// `Σ_{n∈ℤ} pⁿz/(1 − pⁿz)²`, which equals `(1/2πi) σ'(x)`.
pub fn sigma_prime_series(x: Complex64, ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    ctx.check_pole("σ' series", x)?;
    let p = ctx.p();
    let z = e2pi(x);
    let zi = z.inv();
    let tail = ctx.sum_series("σ' series", 1, |n| {
        let pn = p.powi(n as i32);
        let (u, v) = (pn * z, pn * zi);
        u / ((c(1.0) - u) * (c(1.0) - u)) + v / ((c(1.0) - v) * (c(1.0) - v))
    })?;
    Ok(z / ((c(1.0) - z) * (c(1.0) - z)) + tail)
}

/// `π²/sin²(πu)`, written through whichever of `e^{±2πiu}` is small.
fn csc2(u: Complex64) -> Complex64 {
    let mut w = e2pi(u);
    if w.norm() > 1.0 {
        w = w.inv();
    }
    -w / ((c(1.0) - w) * (c(1.0) - w)) * (4.0 * PI * PI)
}

/// `℘(x)` from the lattice sum, each row `m ∈ ℤ` summed in closed form:
/// `℘ = π²/sin²πx − π²/3 + Σ_{n≠0} (π²/sin²π(x − nτ) − π²/sin²πnτ)`.
pub fn wp(x: Complex64, ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    ctx.check_pole("wp", x)?;
    let tau = ctx.tau();
    let rows = ctx.sum_series("℘ lattice rows", 1, |n| {
        let nt = tau * n as f64;
        csc2(x - nt) + csc2(x + nt) - csc2(nt) * 2.0
    })?;
    Ok(csc2(x) - PI * PI / 3.0 + rows)
}

/// `g(x, ζ) = −(1/2πi) θ₁(x − ζ)θ₁'(0)/(θ₁(x)θ₁(ζ))`.
pub fn g(x: Complex64, zeta: Complex64, ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    ctx.check_pole("g", x)?;
    ctx.check_pole("g", zeta)?;
    let num = theta1(x - zeta, ctx)? * theta1_prime_zero(ctx)?;
    let den = theta1(x, ctx)? * theta1(zeta, ctx)?;
    Ok(-num / (den * two_pi_i()))
}

/// `Σ_{m∈ℤ} e^{2πimζ}/(1 − pᵐe^{−2πix})`, with `Σ_{m≥0} e^{2πimζ}` summed
/// in closed form so that real `ζ` is allowed.
pub fn g_series(
    x: Complex64,
    zeta: Complex64,
    ctx: &EllipticContext,
) -> Result<Complex64, EllipticError> {
    ctx.check_pole("g", x)?;
    ctx.check_pole("g", zeta)?;
    let y = check_strip("g series", zeta, ctx)?;
    let yi = y.inv();
    let w = e2pi(-x);
    let wi = w.inv();
    let p = ctx.p();
    let tail = ctx.sum_series("g series", 0, |m| {
        let pm = p.powi(m as i32);
        let up = y.powi(m as i32) * pm * w / (c(1.0) - pm * w);
        if m == 0 {
            return up;
        }
        up - yi.powi(m as i32) * pm * wi / (c(1.0) - pm * wi)
    })?;
    Ok(c(1.0) / (c(1.0) - y) + tail)
}

/// `φ(x, ζ) = −(1/2πi) ∂ₓ g(x, ζ)`, differentiated through the theta ratio.
pub fn phi(
    x: Complex64,
    zeta: Complex64,
    ctx: &EllipticContext,
) -> Result<Complex64, EllipticError> {
    ctx.check_pole("phi", x)?;
    ctx.check_pole("phi", zeta)?;
    let [a0, a1, _] = theta1_jet(x - zeta, ctx)?;
    let [b0, b1, _] = theta1_jet(x, ctx)?;
    let ratio_prime = (a1 * b0 - a0 * b1) / (b0 * b0);
    let tpi = two_pi_i();
    Ok(ratio_prime * theta1_prime_zero(ctx)? / (theta1(zeta, ctx)? * tpi * tpi))
}

/// `Σ_{m∈ℤ} e^{−2πix}pᵐe^{2πimζ}/(1 − pᵐe^{−2πix})²`.
pub fn phi_series(
    x: Complex64,
    zeta: Complex64,
    ctx: &EllipticContext,
) -> Result<Complex64, EllipticError> {
    ctx.check_pole("phi", x)?;
    let y = check_strip("φ series", zeta, ctx)?;
    let yi = y.inv();
    let w = e2pi(-x);
    let wi = w.inv();
    let p = ctx.p();
    ctx.sum_series("φ series", 0, |m| {
        let pm = p.powi(m as i32);
        let up = w * pm * y.powi(m as i32) / ((c(1.0) - pm * w) * (c(1.0) - pm * w));
        if m == 0 {
            return up;
        }
        up + wi * pm * yi.powi(m as i32) / ((c(1.0) - pm * wi) * (c(1.0) - pm * wi))
    })
}

/// `φ₀(ζ) = θ₁''(ζ)/(8π²θ₁(ζ)) − θ₁'''(0)/(24π²θ₁'(0)) + 1/12`, the
/// regular part of `φ(x, ζ)` at `x = 0`.
pub fn phi0(zeta: Complex64, ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    ctx.check_pole("phi0", zeta)?;
    let [t0, _, t2] = theta1_jet(zeta, ctx)?;
    let pi2 = PI * PI;
    Ok(t2 / (t0 * (8.0 * pi2)) - theta1_third_ratio(ctx)? / (24.0 * pi2) + 1.0 / 12.0)
}

/// `Σ_{m≠0} pᵐe^{2πimζ}/(1 − pᵐ)²`.
pub fn phi0_series(zeta: Complex64, ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    let y = check_strip("φ₀ series", zeta, ctx)?;
    let yi = y.inv();
    let p = ctx.p();
    ctx.sum_series("φ₀ series", 1, |m| {
        let pm = p.powi(m as i32);
        (y.powi(m as i32) + yi.powi(m as i32)) * pm / ((c(1.0) - pm) * (c(1.0) - pm))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> EllipticContext {
        EllipticContext::new(Complex64::new(0.1, 0.8)).unwrap()
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
    }

    #[test]
    fn theta_is_odd_with_a_simple_zero() {
        let ctx = ctx();
        assert!(theta1(c(0.0), &ctx).unwrap().norm() < 1e-15);
        let x = Complex64::new(0.31, 0.12);
        assert!(close(
            theta1(-x, &ctx).unwrap(),
            -theta1(x, &ctx).unwrap(),
            1e-13
        ));
        let jet = theta1_jet(c(0.0), &ctx).unwrap();
        assert!(close(jet[1], theta1_prime_zero(&ctx).unwrap(), 1e-13));
    }

    #[test]
    fn small_p_limits() {
        // As p → 0: g → z/(z − 1) + y/(1 − y) and σ → z/(1 − z) + 1/2.
        let ctx = EllipticContext::new(Complex64::new(0.0, 8.0)).unwrap();
        let (x, zeta) = (Complex64::new(0.3, 0.1), c(0.2));
        let (z, y) = (e2pi(x), e2pi(zeta));
        assert!(close(
            g(x, zeta, &ctx).unwrap(),
            z / (z - 1.0) + y / (c(1.0) - y),
            1e-12
        ));
        assert!(close(
            sigma(x, &ctx).unwrap(),
            z / (c(1.0) - z) + 0.5,
            1e-12
        ));
        assert!(phi0(zeta, &ctx).unwrap().norm() < 1e-12);
    }

    #[test]
    fn g_forms_agree_at_the_sample_point() {
        let ctx = EllipticContext::new(Complex64::new(0.0, 0.8)).unwrap();
        let (x, zeta) = (Complex64::new(0.3, 0.1), c(0.2));
        assert!(close(
            g(x, zeta, &ctx).unwrap(),
            g_series(x, zeta, &ctx).unwrap(),
            1e-10
        ));
    }

    #[test]
    fn poles_are_reported() {
        let ctx = ctx();
        let err = sigma(ctx.tau() + 1.0, &ctx).unwrap_err();
        assert!(matches!(err, EllipticError::Pole { .. }));
        assert!(g(Complex64::new(0.2, 0.0), c(1e-11), &ctx).is_err());
    }

    #[test]
    fn series_outside_strip_rejected() {
        let ctx = ctx();
        assert!(matches!(
            phi0_series(Complex64::new(0.1, 1.0), &ctx),
            Err(EllipticError::Domain(_))
        ));
    }
}
