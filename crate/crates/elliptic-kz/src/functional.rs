//! Affine series as functions of `(h, u, τ)`.

use std::f64::consts::PI;

use affine_jacobi::AffineSeries;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use root_data::Weight;

use crate::context::{e2pi, EllipticContext};
use crate::functions::{eta, theta1};
use crate::lie::check_cartan;
use crate::EllipticError;

/// `⟨μ, h⟩` for an `sl_n` weight and a Cartan vector in `gl_n` coordinates.
pub fn pair_weight(mu: &Weight, h: &[Complex64]) -> Complex64 {
    mu.coords()
        .iter()
        .zip(h)
        .map(|(c, &x)| x * (*c.numer() as f64 / *c.denom() as f64))
        .sum()
}

/// `Σ a e^{2πi[⟨μ,h⟩ + Ku + (d + offset)τ]}` over the stored terms
/// `a e^μ p^d`; `p = e^{2πiτ}`.
///
/// The truncation tail is not estimated; callers choose `τ` so that it is
/// negligible.
pub fn evaluate_affine_series(
    s: &AffineSeries,
    h: &[Complex64],
    u: Complex64,
    tau: Complex64,
) -> Result<Complex64, EllipticError> {
    check_cartan(h, s.n())?;
    let offset = s.offset();
    let offset = *offset.numer() as f64 / *offset.denom() as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for (mu, d, c) in s.terms() {
        let (num, den) = c.as_rational().ok_or_else(|| {
            EllipticError::Domain(format!("coefficient {c} of e^{mu} p^{d} is not a number"))
        })?;
        let value = num.to_f64().unwrap_or(f64::NAN) / den.to_f64().unwrap_or(f64::NAN);
        sum += e2pi(pair_weight(mu, h) + u * s.level() as f64 + tau * (d as f64 + offset)) * value;
    }
    Ok(sum)
}

/// `e^{2πih∨u} i^{|R⁺|} η^{r−|R⁺|} ∏_{α>0} θ₁(⟨α, h⟩)`, the closed form of
/// the normalized affine denominator for `sl_n`.
pub fn denominator_closed_form(
    n: usize,
    h: &[Complex64],
    u: Complex64,
    ctx: &EllipticContext,
) -> Result<Complex64, EllipticError> {
    check_cartan(h, n)?;
    let positive = n * (n - 1) / 2;
    let rank = n - 1;
    let mut value = e2pi(u * n as f64) * Complex64::new(0.0, 1.0).powi(positive as i32);
    value *= eta(ctx)?.powi(rank as i32 - positive as i32);
    for a in 0..n {
        for b in a + 1..n {
            value *= theta1(h[a] - h[b], ctx)?;
        }
    }
    Ok(value)
}

/// `e^{−2πiK(½(α,α)τ + ⟨α,h⟩)}`, the multiplier of a level-`K` theta
/// function under `h ↦ h + ατ`.
pub fn theta_multiplier(level: i64, alpha: &Weight, h: &[Complex64], tau: Complex64) -> Complex64 {
    let norm = alpha.norm2();
    let half = 0.5 * *norm.numer() as f64 / *norm.denom() as f64;
    (Complex64::new(0.0, -2.0 * PI * level as f64) * (tau * half + pair_weight(alpha, h))).exp()
}
