//! The elliptic KZ connection `(K + h∨)∂_{ζ_i} − A_i`, its flatness check
//! and the gauge `ψ`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::context::{e2pi, EllipticContext};
use crate::functions::theta1;
use crate::lie::{cartan_basis, check_cartan, weight_pairing, TensorSpace};
use crate::rmatrix::{r_full, r_full_dh, r_full_dzeta, ConnectionMatrix};
use crate::EllipticError;

fn two_pi_i() -> Complex64 {
    Complex64::new(0.0, 2.0 * PI)
}

/// `A_i = M_i − Σ_l π_i(x_l) ∂_{h_l}` at each point, on `V[0]`.
///
/// The derivative `∂_{h_l}` is along `x_l` in the coordinate `h` of
/// `e^λ(h) = e^{2πi⟨λ,h⟩}`; written in the coordinate `2πih` it is the
/// operator `−2πi Σ_l π_i(x_l) ∂_{x_l}`.
#[derive(Clone, Debug)]
pub struct KzConnection {
    pub level: f64,
    /// `K + h∨`.
    pub shifted_level: f64,
    pub zetas: Vec<Complex64>,
    /// `M_i = Σ_{j≠i} r_ij(ζ_i − ζ_j)`.
    pub matrix_parts: Vec<ConnectionMatrix>,
    /// `−π_i(x_l)` for each point `i` and Cartan direction `l`.
    pub derivative_parts: Vec<Vec<DMatrix<Complex64>>>,
}

fn check_points(
    zetas: &[Complex64],
    space: &TensorSpace,
    ctx: &EllipticContext,
) -> Result<(), EllipticError> {
    if zetas.len() != space.points() {
        return Err(EllipticError::Domain(format!(
            "{} points for {} representations",
            zetas.len(),
            space.points()
        )));
    }
    for (i, a) in zetas.iter().enumerate() {
        for b in &zetas[i + 1..] {
            if ctx.lattice_distance(a - b) < crate::context::POLE_RADIUS {
                return Err(EllipticError::Domain(format!(
                    "points {a} and {b} coincide modulo the lattice"
                )));
            }
        }
    }
    Ok(())
}

fn shifted_level(level: f64, space: &TensorSpace) -> Result<f64, EllipticError> {
    let shifted = level + space.n() as f64;
    if shifted.abs() < 1e-12 {
        return Err(EllipticError::Domain(format!("K + h∨ = 0 at K = {level}")));
    }
    Ok(shifted)
}

fn matrix_part(
    space: &TensorSpace,
    zetas: &[Complex64],
    h: &[Complex64],
    ctx: &EllipticContext,
    i: usize,
) -> Result<DMatrix<Complex64>, EllipticError> {
    let mut out = DMatrix::zeros(space.dim(), space.dim());
    for j in 0..zetas.len() {
        if j != i {
            out += r_full(space, i, j, zetas[i] - zetas[j], h, ctx)?;
        }
    }
    Ok(out)
}

fn slot_cartan(space: &TensorSpace, slot: usize, d: &[Complex64]) -> DMatrix<Complex64> {
    space.embed(&[(slot, &space.reps()[slot].diagonal(d))])
}

/// `π_slot(e^{2πi s h})` on the full tensor product.
pub fn slot_exponential(
    space: &TensorSpace,
    slot: usize,
    h: &[Complex64],
    s: f64,
) -> DMatrix<Complex64> {
    let rep = &space.reps()[slot];
    let diag = nalgebra::DVector::from_iterator(
        rep.dim(),
        rep.states().iter().map(|w| e2pi(weight_pairing(w, h) * s)),
    );
    space.embed(&[(slot, &DMatrix::from_diagonal(&diag))])
}

pub fn kz_connection(
    zetas: &[Complex64],
    h: &[Complex64],
    ctx: &EllipticContext,
    level: f64,
    space: &TensorSpace,
) -> Result<KzConnection, EllipticError> {
    check_points(zetas, space, ctx)?;
    check_cartan(h, space.n())?;
    let shifted = shifted_level(level, space)?;
    let basis = cartan_basis(space.n());
    let mut matrix_parts = Vec::with_capacity(zetas.len());
    let mut derivative_parts = Vec::with_capacity(zetas.len());
    for i in 0..zetas.len() {
        matrix_parts.push(ConnectionMatrix::restricted(
            space,
            &matrix_part(space, zetas, h, ctx, i)?,
        ));
        derivative_parts.push(
            basis
                .iter()
                .map(|x| {
                    let d: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
                    space.restrict(&(-slot_cartan(space, i, &d))).0
                })
                .collect(),
        );
    }
    Ok(KzConnection {
        level,
        shifted_level: shifted,
        zetas: zetas.to_vec(),
        matrix_parts,
        derivative_parts,
    })
}

/// Outcome of [`flatness_check`].
#[derive(Clone, Debug, Serialize)]
pub struct FlatnessReport {
    pub n: usize,
    pub points: usize,
    pub level: f64,
    pub fd_step: f64,
    /// Largest `|[D_i, D_j] φ_ν v|` over pairs, test weights `ν` and basis
    /// vectors `v`.
    pub max_residual: f64,
    /// Largest norm of the individual terms making up the commutator.
    pub scale: f64,
    pub relative_residual: f64,
    /// Relative error of the central-difference `ζ`-derivatives against
    /// the analytic ones.
    pub derivative_error: f64,
    pub weight_leak: f64,
}

fn max_column_norm(m: &DMatrix<Complex64>) -> f64 {
    m.column_iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Evaluate `[D_i, D_j]` for `D_i = (K + h∨)∂_{ζ_i} − A_i` on the sections
/// `e^{2πi⟨ν,h⟩} v`, `ν ∈ {0} ∪ R⁺`, `v ∈ V[0]`.
///
/// `ζ`-derivatives are central differences with step `fd_step`; the
/// `h`-derivatives of `r` are analytic.
pub fn flatness_check(
    zetas: &[Complex64],
    h: &[Complex64],
    ctx: &EllipticContext,
    level: f64,
    space: &TensorSpace,
    fd_step: f64,
) -> Result<FlatnessReport, EllipticError> {
    check_points(zetas, space, ctx)?;
    check_cartan(h, space.n())?;
    let shifted = shifted_level(level, space)?;
    if space.zero_weight_indices().is_empty() {
        return Err(EllipticError::Domain(
            "the zero-weight subspace is trivial".into(),
        ));
    }
    let n = space.n();
    let basis = cartan_basis(n);
    let restrict = |m: &DMatrix<Complex64>| space.restrict(m).0;
    let mut weight_leak = 0.0f64;
    let mut parts = Vec::new();
    for i in 0..zetas.len() {
        let full = matrix_part(space, zetas, h, ctx, i)?;
        weight_leak = weight_leak.max(space.restrict(&full).1);
        parts.push(restrict(&full));
    }
    let mut dh: Vec<Vec<DMatrix<Complex64>>> = Vec::new();
    let mut slot_x: Vec<Vec<DMatrix<Complex64>>> = Vec::new();
    for i in 0..zetas.len() {
        let mut per_dir = Vec::new();
        let mut xs = Vec::new();
        for x in &basis {
            let mut acc = DMatrix::zeros(space.dim(), space.dim());
            for k in 0..zetas.len() {
                if k != i {
                    acc += r_full_dh(space, i, k, zetas[i] - zetas[k], h, x, ctx)?;
                }
            }
            per_dir.push(restrict(&acc));
            let d: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
            xs.push(restrict(&(-slot_cartan(space, i, &d))));
        }
        dh.push(per_dir);
        slot_x.push(xs);
    }
    let tests: Vec<Vec<f64>> = std::iter::once(vec![0.0; n])
        .chain((0..n).flat_map(|a| {
            (a + 1..n).map(move |b| {
                (0..n)
                    .map(|c| f64::from(u8::from(c == a)) - f64::from(u8::from(c == b)))
                    .collect()
            })
        }))
        .collect();

    let fd = |i: usize, j: usize| -> Result<DMatrix<Complex64>, EllipticError> {
        let mut plus = zetas.to_vec();
        let mut minus = zetas.to_vec();
        plus[j] += fd_step;
        minus[j] -= fd_step;
        let diff = matrix_part(space, &plus, h, ctx, i)? - matrix_part(space, &minus, h, ctx, i)?;
        Ok(restrict(&diff) / Complex64::new(2.0 * fd_step, 0.0))
    };
    let (mut max_residual, mut scale, mut derivative_error) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..zetas.len() {
        for j in i + 1..zetas.len() {
            let dj_mi = fd(i, j)?;
            let di_mj = fd(j, i)?;
            let exact_dj_mi = restrict(&-r_full_dzeta(space, i, j, zetas[i] - zetas[j], h, ctx)?);
            let exact_di_mj = restrict(&-r_full_dzeta(space, j, i, zetas[j] - zetas[i], h, ctx)?);
            for (a, b) in [(&dj_mi, &exact_dj_mi), (&di_mj, &exact_di_mj)] {
                derivative_error =
                    derivative_error.max((a - b).norm() / b.norm().max(f64::MIN_POSITIVE));
            }
            let k_term = (&dj_mi - &di_mj) * Complex64::new(shifted, 0.0);
            let (mi, mj) = (&parts[i], &parts[j]);
            let (mimj, mjmi) = (mi * mj, mj * mi);
            let mut c0 = k_term + &mimj - &mjmi;
            scale = scale
                .max(max_column_norm(&dj_mi) * shifted.abs())
                .max(max_column_norm(&mimj))
                .max(max_column_norm(&mjmi));
            let mut c1 = Vec::with_capacity(basis.len());
            for l in 0..basis.len() {
                let a = &slot_x[i][l] * &dh[j][l];
                let b = &slot_x[j][l] * &dh[i][l];
                scale = scale.max(max_column_norm(&a)).max(max_column_norm(&b));
                c0 += a - b;
                c1.push(
                    mi * &slot_x[j][l] - &slot_x[j][l] * mi + &slot_x[i][l] * mj
                        - mj * &slot_x[i][l],
                );
            }
            for nu in &tests {
                let mut total = c0.clone();
                for (l, x) in basis.iter().enumerate() {
                    let slope: f64 = nu.iter().zip(x).map(|(a, b)| a * b).sum();
                    total += &c1[l] * (two_pi_i() * slope);
                }
                max_residual = max_residual.max(max_column_norm(&total));
            }
        }
    }
    Ok(FlatnessReport {
        n,
        points: zetas.len(),
        level,
        fd_step,
        max_residual,
        scale,
        relative_residual: if scale > 0.0 {
            max_residual / scale
        } else {
            0.0
        },
        derivative_error,
        weight_leak,
    })
}

/// `ψ = ∏_{i<j} θ₁(ζ_i − ζ_j + (π_i(h) − π_j(h))/N)/θ₁(ζ_i − ζ_j)` on `V[0]`,
/// `N` the number of points.
pub fn psi_gauge(
    zetas: &[Complex64],
    h: &[Complex64],
    ctx: &EllipticContext,
    space: &TensorSpace,
) -> Result<ConnectionMatrix, EllipticError> {
    check_points(zetas, space, ctx)?;
    check_cartan(h, space.n())?;
    let points = zetas.len() as f64;
    let zero = space.zero_weight_indices();
    let mut diag = Vec::with_capacity(zero.len());
    for &idx in zero {
        let weights: Vec<Complex64> = (0..zetas.len())
            .map(|s| weight_pairing(space.slot_weight(idx, s), h))
            .collect();
        let mut value = Complex64::new(1.0, 0.0);
        for i in 0..zetas.len() {
            for j in i + 1..zetas.len() {
                let d = zetas[i] - zetas[j];
                ctx.check_pole("psi", d)?;
                value *= theta1(d + (weights[i] - weights[j]) / points, ctx)? / theta1(d, ctx)?;
            }
        }
        diag.push(value);
    }
    let matrix = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(diag));
    Ok(ConnectionMatrix {
        n_points: space.points(),
        rep_dims: space.rep_dims(),
        zero_weight_basis: space.zero_weight_basis(),
        matrix,
        weight_leak: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_point_has_no_r_sum() {
        let space = TensorSpace::new(2, &[2]).unwrap();
        let ctx = EllipticContext::new(c(0.0, 1.1)).unwrap();
        let h = [c(0.13, 0.0), c(-0.13, 0.0)];
        let kz = kz_connection(&[c(0.2, 0.0)], &h, &ctx, 1.0, &space).unwrap();
        assert_eq!(kz.matrix_parts[0].matrix.norm(), 0.0);
        let psi = psi_gauge(&[c(0.2, 0.0)], &h, &ctx, &space).unwrap();
        assert!((psi.matrix - DMatrix::identity(1, 1)).norm() < 1e-15);
    }

    #[test]
    fn coincident_points_rejected() {
        let space = TensorSpace::defining(2, 2).unwrap();
        let ctx = EllipticContext::new(c(0.0, 1.1)).unwrap();
        let h = [c(0.13, 0.0), c(-0.13, 0.0)];
        let err = kz_connection(&[c(0.2, 0.0), c(1.2, 0.0)], &h, &ctx, 1.0, &space).unwrap_err();
        assert!(matches!(err, EllipticError::Domain(_)));
    }

    #[test]
    fn two_point_zero_weight_space() {
        let space = TensorSpace::defining(2, 2).unwrap();
        let ctx = EllipticContext::new(c(0.0, 1.1)).unwrap();
        let h = [c(0.13, 0.02), c(-0.13, -0.02)];
        let kz = kz_connection(&[c(0.21, 0.03), c(-0.17, 0.0)], &h, &ctx, 1.7, &space).unwrap();
        assert_eq!(kz.matrix_parts[0].matrix.shape(), (2, 2));
        assert!(kz.matrix_parts[0].weight_leak < 1e-12);
        assert_eq!(kz.derivative_parts[1].len(), 1);
    }
}
