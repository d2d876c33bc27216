//! Numerical certification suites, each producing [`CheckReport`]s.

use std::f64::consts::PI;

use affine_jacobi::{normalized_denominator, weyl_kac_character};
use nalgebra::DMatrix;
use num_complex::Complex64;
use root_data::RootData;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::context::{e2pi, EllipticContext};
use crate::functional::{denominator_closed_form, evaluate_affine_series, theta_multiplier};
use crate::functions::{
    eta, g, g_series, phi, phi0, phi0_series, phi_series, sigma, sigma_prime_series,
    sigma_principal_value, sigma_series, sigma_shifted_series, theta1, theta1_prime_zero, wp,
};
use crate::kz::{flatness_check, psi_gauge, slot_exponential};
use crate::lie::{cartan_basis, TensorSpace};
use crate::rmatrix::{omega_full, r_full, r_residue};
use crate::EllipticError;

/// One numerical check: the largest residual over its samples.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub parameters: serde_json::Value,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckReport {
    fn new(
        check: impl Into<String>,
        parameters: serde_json::Value,
        max_residual: f64,
        tolerance: f64,
    ) -> Self {
        CheckReport {
            check: check.into(),
            parameters,
            max_residual,
            tolerance,
            pass: max_residual.is_finite() && max_residual <= tolerance,
        }
    }
}

/// Tolerances of every suite.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Tolerances {
    pub identity: f64,
    pub unitarity: f64,
    pub residue: f64,
    pub quasi_periodicity: f64,
    pub weight_preservation: f64,
    pub psi_period: f64,
    pub psi_tau: f64,
    pub closed_form: f64,
    pub theta_law: f64,
    pub flatness: f64,
    pub fd_step: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
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
        }
    }
}

impl Tolerances {
    /// Field names accepted by [`Tolerances::set`].
    pub const NAMES: [&'static str; 11] = [
        "identity",
        "unitarity",
        "residue",
        "quasi_periodicity",
        "weight_preservation",
        "psi_period",
        "psi_tau",
        "closed_form",
        "theta_law",
        "flatness",
        "fd_step",
    ];

    /// Override one tolerance by field name.
    pub fn set(&mut self, name: &str, value: f64) -> Result<(), EllipticError> {
        if !(value.is_finite() && value > 0.0) {
            return Err(EllipticError::Domain(format!(
                "tolerance {name} = {value} must be positive"
            )));
        }
        let slot = match name {
            "identity" => &mut self.identity,
            "unitarity" => &mut self.unitarity,
            "residue" => &mut self.residue,
            "quasi_periodicity" => &mut self.quasi_periodicity,
            "weight_preservation" => &mut self.weight_preservation,
            "psi_period" => &mut self.psi_period,
            "psi_tau" => &mut self.psi_tau,
            "closed_form" => &mut self.closed_form,
            "theta_law" => &mut self.theta_law,
            "flatness" => &mut self.flatness,
            "fd_step" => &mut self.fd_step,
            _ => {
                return Err(EllipticError::Domain(format!(
                    "unknown tolerance {name:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        };
        *slot = value;
        Ok(())
    }
}

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `|a − b| / max(1, |a|, |b|)`.
pub fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

fn rel_matrix(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

/// `f'(x)` by the trapezoid rule on Cauchy's integral over a circle.
pub fn cauchy_derivative(
    mut f: impl FnMut(Complex64) -> Result<Complex64, EllipticError>,
    x: Complex64,
    radius: f64,
    nodes: usize,
) -> Result<Complex64, EllipticError> {
    let mut acc = cx(0.0, 0.0);
    for k in 0..nodes {
        let w = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / nodes as f64);
        acc += f(x + w * radius)? / w;
    }
    Ok(acc / (radius * nodes as f64))
}

/// Sample `x` values of the identity grid.
pub const GRID_X: [(f64, f64); 3] = [(0.31, 0.07), (-0.22, 0.03), (0.43, -0.05)];
/// Sample `ζ` values of the identity grid.
pub const GRID_ZETA: [(f64, f64); 3] = [(0.17, 0.04), (-0.36, -0.02), (0.27, 0.0)];
/// Sample `τ` values of the identity grid; `|p| ≤ 0.48`.
pub const GRID_TAU: [(f64, f64); 3] = [(0.0, 0.12), (0.25, 0.3), (-0.4, 0.7)];

/// Labels of the reports produced by [`identity_suite`].
pub const IDENTITY_LABELS: [&str; 13] = [
    "theta1-fourier",
    "sigma-series",
    "sigma-derivative",
    "eta-cubed",
    "g-series",
    "sigma-shifted-series",
    "sigma-principal-value",
    "phi-series",
    "phi0-series",
    "theta1-periodicity",
    "wp-periodicity",
    "sigma-periodicity",
    "g-symmetry",
];

const DERIVATIVE_RADIUS: f64 = 0.05;
const DERIVATIVE_NODES: usize = 64;

/// `θ₁` from its Fourier series `2Σ_{n≥0} (−1)ⁿ p^{(n+½)²/2} sin((2n+1)πx)`.
fn theta1_fourier(x: Complex64, ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    ctx.sum_series("θ₁ Fourier series", 0, |n| {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let e = (n as f64 + 0.5) * (n as f64 + 0.5) / 2.0;
        ctx.p_pow(e) * (x * ((2 * n + 1) as f64 * PI)).sin() * (2.0 * sign)
    })
}

/// `η³ = Σ_{n≥0} (−1)ⁿ(2n + 1) p^{(2n+1)²/8}`.
fn eta_cubed_series(ctx: &EllipticContext) -> Result<Complex64, EllipticError> {
    ctx.sum_series("η³ series", 0, |n| {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let m = (2 * n + 1) as f64;
        ctx.p_pow(m * m / 8.0) * (sign * m)
    })
}

/// Residuals of the elliptic-function identities at one grid point, keyed by label.
fn identity_residuals(
    x: Complex64,
    zeta: Complex64,
    ctx: &EllipticContext,
) -> Result<Vec<(&'static str, f64)>, EllipticError> {
    let tau = ctx.tau();
    let one = cx(1.0, 0.0);
    let tpi = cx(0.0, 2.0 * PI);
    let mut out = Vec::new();

    let th = theta1(x, ctx)?;
    out.push(("theta1-fourier", rel(th, theta1_fourier(x, ctx)?)));

    let s = sigma(x, ctx)?;
    out.push(("sigma-series", rel(s, sigma_series(x, ctx)?)));

    let s_prime = cauchy_derivative(|y| sigma(y, ctx), x, DERIVATIVE_RADIUS, DERIVATIVE_NODES)?;
    let ds = sigma_prime_series(x, ctx)?;
    let c_x = ds + wp(x, ctx)? / (4.0 * PI * PI);
    let c_zeta = sigma_prime_series(zeta, ctx)? + wp(zeta, ctx)? / (4.0 * PI * PI);
    out.push((
        "sigma-derivative",
        rel(ds, s_prime / tpi).max(rel(c_x, c_zeta)),
    ));

    let eta3 = eta(ctx)?.powi(3);
    out.push((
        "eta-cubed",
        rel(eta3, eta_cubed_series(ctx)?).max(rel(theta1_prime_zero(ctx)?, eta3 * (2.0 * PI))),
    ));

    let gv = g(x, zeta, ctx)?;
    out.push(("g-series", rel(gv, g_series(x, zeta, ctx)?)));

    let sz = sigma(zeta, ctx)?;
    out.push((
        "sigma-shifted-series",
        rel(sigma_shifted_series(zeta, ctx)?, sz - 0.5),
    ));
    out.push((
        "sigma-principal-value",
        rel(sigma_principal_value(zeta, ctx)?, sz),
    ));

    let ph = phi(x, zeta, ctx)?;
    let dg = cauchy_derivative(|y| g(y, zeta, ctx), x, DERIVATIVE_RADIUS, DERIVATIVE_NODES)?;
    out.push((
        "phi-series",
        rel(ph, phi_series(x, zeta, ctx)?).max(rel(ph, -dg / tpi)),
    ));

    out.push((
        "phi0-series",
        rel(phi0(zeta, ctx)?, phi0_series(zeta, ctx)?),
    ));

    let th_tau = -ctx.p_pow(-0.5) * e2pi(-x) * th;
    out.push((
        "theta1-periodicity",
        [
            rel(theta1(-x, ctx)?, -th),
            rel(theta1(x + 1.0, ctx)?, -th),
            rel(theta1(x + tau, ctx)?, th_tau),
        ]
        .into_iter()
        .fold(0.0, f64::max),
    ));

    let w = wp(x, ctx)?;
    out.push((
        "wp-periodicity",
        [
            rel(wp(-x, ctx)?, w),
            rel(wp(x + 1.0, ctx)?, w),
            rel(wp(x + tau, ctx)?, w),
        ]
        .into_iter()
        .fold(0.0, f64::max),
    ));

    out.push((
        "sigma-periodicity",
        [
            rel(sigma(-zeta, ctx)?, -sz),
            rel(sigma(zeta + 1.0, ctx)?, sz),
            rel(sigma(zeta + tau, ctx)?, sz + one),
        ]
        .into_iter()
        .fold(0.0, f64::max),
    ));

    out.push((
        "g-symmetry",
        [
            rel(g(zeta, x, ctx)?, -gv),
            rel(g(-x, -zeta, ctx)?, -gv),
            rel(g_series(zeta, x, ctx)?, -gv),
            rel(g(x + 1.0, zeta, ctx)?, gv),
            rel(g(x, zeta + 1.0, ctx)?, gv),
            rel(g(x + tau, zeta, ctx)?, e2pi(zeta) * gv),
            rel(g(x, zeta + tau, ctx)?, e2pi(x) * gv),
        ]
        .into_iter()
        .fold(0.0, f64::max),
    ));
    Ok(out)
}

/// The theta, sigma, ℘, g and φ identities over the 3×3×3 grid of
/// [`GRID_X`] × [`GRID_ZETA`] × [`GRID_TAU`].
pub fn identity_suite(tol: &Tolerances) -> Result<Vec<CheckReport>, EllipticError> {
    let mut worst: Vec<(&'static str, f64)> = Vec::new();
    for &(tr, ti) in &GRID_TAU {
        let ctx = EllipticContext::new(cx(tr, ti))?;
        for &(xr, xi) in &GRID_X {
            for &(zr, zi) in &GRID_ZETA {
                for (label, r) in identity_residuals(cx(xr, xi), cx(zr, zi), &ctx)? {
                    match worst.iter_mut().find(|(l, _)| *l == label) {
                        Some(slot) => slot.1 = slot.1.max(r),
                        None => worst.push((label, r)),
                    }
                }
            }
        }
    }
    let params = json!({"x": GRID_X, "zeta": GRID_ZETA, "tau": GRID_TAU});
    Ok(worst
        .into_iter()
        .map(|(label, r)| CheckReport::new(label, params.clone(), r, tol.identity))
        .collect())
}

/// A generic real-ish Cartan vector for `sl_n`, indexed by `seed`.
pub fn sample_cartan(n: usize, seed: usize) -> Vec<Complex64> {
    let mut h: Vec<Complex64> = (0..n)
        .map(|a| {
            let t = (a * 7 + seed * 3 + 1) as f64;
            cx(
                0.083 * t + 0.011 * (seed as f64),
                0.013 * ((a + seed) % 3) as f64,
            )
        })
        .collect();
    let mean: Complex64 = h.iter().sum::<Complex64>() / n as f64;
    for x in &mut h {
        *x -= mean;
    }
    h
}

/// `(ζ, τ)` samples of the r-matrix suite.
pub const R_SAMPLES: [((f64, f64), (f64, f64)); 3] = [
    ((0.23, 0.05), (0.0, 0.9)),
    ((-0.31, 0.02), (0.2, 1.1)),
    ((0.41, -0.03), (-0.1, 0.6)),
];

/// Unitarity, residue, quasi-periodicity and weight preservation of
/// `r(ζ)` on `ℂⁿ ⊗ ℂⁿ`.
pub fn r_matrix_suite(n: usize, tol: &Tolerances) -> Result<Vec<CheckReport>, EllipticError> {
    let space = TensorSpace::defining(n, 2)?;
    let omega = omega_full(&space, 0, 1)?;
    let casimir: DMatrix<Complex64> = cartan_basis(n)
        .iter()
        .map(|x| {
            let d: Vec<Complex64> = x.iter().map(|&v| cx(v, 0.0)).collect();
            let m = space.reps()[0].diagonal(&d);
            space.embed(&[(0, &m), (1, &m)])
        })
        .fold(DMatrix::zeros(space.dim(), space.dim()), |a, b| a + b);
    let tpi = cx(0.0, 2.0 * PI);
    let (mut unitarity, mut residue, mut quasi, mut leak) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for (seed, &((zr, zi), (tr, ti))) in R_SAMPLES.iter().enumerate() {
        let ctx = EllipticContext::new(cx(tr, ti))?;
        let h = sample_cartan(n, seed);
        let zeta = cx(zr, zi);
        let r = r_full(&space, 0, 1, zeta, &h, &ctx)?;
        let r21 = r_full(&space, 1, 0, -zeta, &h, &ctx)?;
        unitarity = unitarity.max((&r + &r21).norm() / r.norm());
        let res = r_residue(&space, 0, 1, &h, &ctx, 1e-2, 64)?;
        residue = residue.max(rel_matrix(&res, &omega));
        quasi = quasi.max(rel_matrix(&r_full(&space, 0, 1, zeta + 1.0, &h, &ctx)?, &r));
        let shifted = r_full(&space, 0, 1, zeta + ctx.tau(), &h, &ctx)?;
        let left =
            slot_exponential(&space, 0, &h, 1.0) * &r * slot_exponential(&space, 0, &h, -1.0)
                - &casimir * tpi;
        let right =
            slot_exponential(&space, 1, &h, -1.0) * &r * slot_exponential(&space, 1, &h, 1.0)
                - &casimir * tpi;
        quasi = quasi
            .max(rel_matrix(&shifted, &left))
            .max(rel_matrix(&shifted, &right));
        leak = leak.max(space.restrict(&r).1);
    }
    let params = json!({"n": n, "samples": R_SAMPLES, "residue_radius": 1e-2, "residue_nodes": 64});
    Ok(vec![
        CheckReport::new(
            format!("r-unitarity sl{n}"),
            params.clone(),
            unitarity,
            tol.unitarity,
        ),
        CheckReport::new(
            format!("r-residue sl{n}"),
            params.clone(),
            residue,
            tol.residue,
        ),
        CheckReport::new(
            format!("r-quasi-periodicity sl{n}"),
            params.clone(),
            quasi,
            tol.quasi_periodicity,
        ),
        CheckReport::new(
            format!("r-weight-preservation sl{n}"),
            params,
            leak,
            tol.weight_preservation,
        ),
    ])
}

/// Transformation law of `ψ` under `ζ_i ↦ ζ_i + 1` and `ζ_i ↦ ζ_i + τ`.
pub fn psi_suite(tol: &Tolerances) -> Result<Vec<CheckReport>, EllipticError> {
    let cases: [(usize, &[usize]); 3] = [(2, &[1, 1]), (2, &[1, 1, 2]), (3, &[1, 1, 1])];
    let zetas = [cx(0.11, 0.02), cx(-0.23, 0.05), cx(0.37, -0.04)];
    let ctx = EllipticContext::new(cx(0.15, 1.05))?;
    let (mut period, mut tau_law) = (0.0f64, 0.0f64);
    for (seed, (n, degrees)) in cases.iter().enumerate() {
        let space = TensorSpace::new(*n, degrees)?;
        let h = sample_cartan(*n, seed);
        let pts = &zetas[..degrees.len()];
        let psi = psi_gauge(pts, &h, &ctx, &space)?.matrix;
        for i in 0..pts.len() {
            let mut moved = pts.to_vec();
            moved[i] += 1.0;
            period = period.max(rel_matrix(
                &psi_gauge(&moved, &h, &ctx, &space)?.matrix,
                &psi,
            ));
            moved[i] += ctx.tau() - 1.0;
            let factor = space.restrict(&slot_exponential(&space, i, &h, -1.0)).0;
            tau_law = tau_law.max(rel_matrix(
                &psi_gauge(&moved, &h, &ctx, &space)?.matrix,
                &(factor * &psi),
            ));
        }
    }
    let params = json!({"cases": ["sl2 [1,1]", "sl2 [1,1,2]", "sl3 [1,1,1]"], "tau": [0.15, 1.05]});
    Ok(vec![
        CheckReport::new("psi-period-1", params.clone(), period, tol.psi_period),
        CheckReport::new("psi-period-tau", params, tau_law, tol.psi_tau),
    ])
}

/// `(h seed, u, τ)` samples for the closed form of the denominator.
pub const CLOSED_FORM_SAMPLES: [(usize, (f64, f64), (f64, f64)); 10] = [
    (0, (0.1, 0.0), (0.0, 1.2)),
    (1, (0.0, 0.05), (0.3, 1.0)),
    (2, (-0.2, 0.1), (-0.25, 1.5)),
    (3, (0.37, 0.0), (0.1, 1.1)),
    (4, (0.05, -0.02), (0.45, 1.3)),
    (5, (0.1, 0.0), (0.0, 1.2)),
    (6, (0.0, 0.05), (0.3, 1.0)),
    (7, (-0.2, 0.1), (-0.25, 1.5)),
    (8, (0.37, 0.0), (0.1, 1.1)),
    (9, (0.05, -0.02), (0.45, 1.3)),
];

/// The truncated normalized denominator against its theta-function closed
/// form: the first five samples on `sl₂`, the rest on `sl₃`.
pub fn closed_form_suite(order: i64, tol: &Tolerances) -> Result<Vec<CheckReport>, EllipticError> {
    let mut worst = 0.0f64;
    for n in 2..=3 {
        let rd = RootData::build_a_type(n).map_err(|e| EllipticError::Domain(e.to_string()))?;
        let series = normalized_denominator(&rd, order);
        for &(seed, (ur, ui), (tr, ti)) in
            CLOSED_FORM_SAMPLES.iter().filter(|s| (s.0 < 5) == (n == 2))
        {
            let ctx = EllipticContext::new(cx(tr, ti))?;
            let h = sample_cartan(n, seed);
            let u = cx(ur, ui);
            let lhs = evaluate_affine_series(&series, &h, u, ctx.tau())?;
            let rhs = denominator_closed_form(n, &h, u, &ctx)?;
            worst = worst.max((lhs - rhs).norm() / rhs.norm());
        }
    }
    Ok(vec![CheckReport::new(
        "denominator-closed-form",
        json!({"N": order, "samples": CLOSED_FORM_SAMPLES}),
        worst,
        tol.closed_form,
    )])
}

/// `ch L(λ + KΛ₀)(h + ατ) = e^{−2πiK(τ + ⟨α,h⟩)} ch L(λ + KΛ₀)(h)` for the
/// simple roots `α`, sl₂ at `K = 1, 2` and sl₃ at `K = 1`.
pub fn theta_law_suite(order: i64, tol: &Tolerances) -> Result<Vec<CheckReport>, EllipticError> {
    let ctx = EllipticContext::new(cx(0.1, 1.1))?;
    let u = cx(0.07, 0.0);
    let mut worst = 0.0f64;
    for (n, level) in [(2usize, 1i64), (2, 2), (3, 1)] {
        let rd = RootData::build_a_type(n).map_err(|e| EllipticError::Domain(e.to_string()))?;
        for (seed, lam) in rd.dominant_of_level(level).into_iter().enumerate() {
            let ch = weyl_kac_character(&rd, &lam, level, order)
                .map_err(|e| EllipticError::Domain(e.to_string()))?;
            let h = sample_cartan(n, seed);
            let base = evaluate_affine_series(&ch, &h, u, ctx.tau())?;
            for alpha in rd.simple_roots() {
                let alpha_vec: Vec<Complex64> = alpha
                    .coords()
                    .iter()
                    .map(|c| cx(*c.numer() as f64 / *c.denom() as f64, 0.0))
                    .collect();
                let moved: Vec<Complex64> = h
                    .iter()
                    .zip(&alpha_vec)
                    .map(|(a, b)| a + b * ctx.tau())
                    .collect();
                let lhs = evaluate_affine_series(&ch, &moved, u, ctx.tau())?;
                let rhs = theta_multiplier(level, alpha, &h, ctx.tau()) * base;
                worst = worst.max((lhs - rhs).norm() / rhs.norm());
            }
        }
    }
    Ok(vec![CheckReport::new(
        "theta-law-k1",
        json!({"N": order, "tau": [0.1, 1.1], "cases": ["sl2 K=1", "sl2 K=2", "sl3 K=1"]}),
        worst,
        tol.theta_law,
    )])
}

/// A flatness sample: `(n, degrees, points, K, τ, h seed)`.
pub type FlatnessSample = (
    usize,
    &'static [usize],
    &'static [(f64, f64)],
    f64,
    (f64, f64),
    usize,
);

/// Flatness samples: sl₂ with two and three points at two `(K, τ, h)`
/// each. Three points use `ℂ² ⊗ ℂ² ⊗ S²ℂ²`, since `(ℂ²)^{⊗3}[0] = 0`.
pub const FLATNESS_SAMPLES: [FlatnessSample; 4] = [
    (
        2,
        &[1, 1],
        &[(0.21, 0.03), (-0.17, 0.0)],
        1.7,
        (0.0, 1.1),
        0,
    ),
    (
        2,
        &[1, 1],
        &[(0.12, -0.02), (0.41, 0.05)],
        0.6,
        (0.15, 0.9),
        1,
    ),
    (
        2,
        &[1, 1, 2],
        &[(0.21, 0.03), (-0.17, 0.0), (0.36, -0.04)],
        1.7,
        (0.0, 1.1),
        0,
    ),
    (
        2,
        &[1, 1, 2],
        &[(0.12, -0.02), (0.41, 0.05), (-0.28, 0.02)],
        0.6,
        (0.15, 0.9),
        1,
    ),
];

/// Run [`flatness_check`] at `fd_step` and `fd_step/2` on every sample.
///
/// Reports the relative commutator residual and the ratio by which the
/// central-difference derivative error falls when the step is halved.
pub fn flatness_suite(
    samples: &[FlatnessSample],
    tol: &Tolerances,
) -> Result<Vec<CheckReport>, EllipticError> {
    let mut out = Vec::new();
    for (idx, &(n, degrees, points, level, (tr, ti), seed)) in samples.iter().enumerate() {
        let ctx = EllipticContext::new(cx(tr, ti))?;
        let space = TensorSpace::new(n, degrees)?;
        let h = sample_cartan(n, seed);
        let zetas: Vec<Complex64> = points.iter().map(|&(a, b)| cx(a, b)).collect();
        let coarse = flatness_check(&zetas, &h, &ctx, level, &space, tol.fd_step)?;
        let fine = flatness_check(&zetas, &h, &ctx, level, &space, tol.fd_step / 2.0)?;
        let ratio = coarse.derivative_error / fine.derivative_error;
        let params = json!({
            "n": n, "degrees": degrees, "K": level, "tau": [tr, ti], "points": points,
            "fd_step": tol.fd_step,
            "relative_residual": [coarse.relative_residual, fine.relative_residual],
            "derivative_error": [coarse.derivative_error, fine.derivative_error],
            "halving_ratio": ratio,
        });
        let residual = coarse.relative_residual.max(fine.relative_residual);
        out.push(CheckReport::new(
            format!("kz-flatness #{idx}"),
            params.clone(),
            residual,
            tol.flatness,
        ));
        // Second-order decay means the derivative error falls by 4 per halving.
        out.push(CheckReport::new(
            format!("kz-fd-decay #{idx}"),
            params,
            (ratio - 4.0).abs(),
            0.5,
        ));
    }
    Ok(out)
}

/// Every suite at its default sizes.
pub fn all_checks(tol: &Tolerances) -> Result<Vec<CheckReport>, EllipticError> {
    let mut out = identity_suite(tol)?;
    for n in 2..=3 {
        out.extend(r_matrix_suite(n, tol)?);
    }
    out.extend(psi_suite(tol)?);
    out.extend(closed_form_suite(12, tol)?);
    out.extend(theta_law_suite(12, tol)?);
    out.extend(flatness_suite(&FLATNESS_SAMPLES, tol)?);
    Ok(out)
}
