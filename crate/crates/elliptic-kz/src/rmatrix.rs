//! The classical dynamical r-matrix
//! `r(ζ) = 2πi[Σ_{α>0} (e_α⊗f_α g(ζ, ⟨α,h⟩) + f_α⊗e_α g(ζ, −⟨α,h⟩)) − Σ_l x_l⊗x_l σ(ζ)]`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::context::EllipticContext;
use crate::functions::{g, phi, sigma, sigma_prime_series};
use crate::lie::{cartan_basis, check_cartan, TensorSpace};
use crate::EllipticError;

fn two_pi_i() -> Complex64 {
    Complex64::new(0.0, 2.0 * PI)
}

/// An operator on `V[0]` of a tensor product of representations.
#[derive(Clone, Debug)]
pub struct ConnectionMatrix {
    pub n_points: usize,
    pub rep_dims: Vec<usize>,
    /// Per-slot state indices of each basis vector of `V[0]`.
    pub zero_weight_basis: Vec<Vec<usize>>,
    pub matrix: DMatrix<Complex64>,
    /// Largest entry mapping `V[0]` outside itself before restriction.
    pub weight_leak: f64,
}

impl ConnectionMatrix {
    pub fn restricted(space: &TensorSpace, full: &DMatrix<Complex64>) -> Self {
        let (matrix, weight_leak) = space.restrict(full);
        ConnectionMatrix {
            n_points: space.points(),
            rep_dims: space.rep_dims(),
            zero_weight_basis: space.zero_weight_basis(),
            matrix,
            weight_leak,
        }
    }
}

fn check_slots(space: &TensorSpace, i: usize, j: usize) -> Result<(), EllipticError> {
    if i == j || i >= space.points() || j >= space.points() {
        return Err(EllipticError::Domain(format!(
            "slots ({i}, {j}) are not two distinct points of {}",
            space.points()
        )));
    }
    Ok(())
}

/// `Σ_{a≠b} c(a, b) E_ab^{(i)} E_ba^{(j)} + d Σ_l x_l^{(i)} x_l^{(j)}`.
fn assemble(
    space: &TensorSpace,
    i: usize,
    j: usize,
    mut root: impl FnMut(usize, usize) -> Result<Complex64, EllipticError>,
    cartan: Complex64,
) -> Result<DMatrix<Complex64>, EllipticError> {
    check_slots(space, i, j)?;
    let n = space.n();
    let (ri, rj) = (&space.reps()[i], &space.reps()[j]);
    let mut out = DMatrix::zeros(space.dim(), space.dim());
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let coeff = root(a, b)?;
            if coeff == Complex64::new(0.0, 0.0) {
                continue;
            }
            out += space.embed(&[(i, &ri.e(a, b)), (j, &rj.e(b, a))]) * coeff;
        }
    }
    if cartan != Complex64::new(0.0, 0.0) {
        for x in cartan_basis(n) {
            let d: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
            out += space.embed(&[(i, &ri.diagonal(&d)), (j, &rj.diagonal(&d))]) * cartan;
        }
    }
    Ok(out)
}

/// The Casimir tensor `Ω = Σ_{α>0} (e_α⊗f_α + f_α⊗e_α) + Σ_l x_l⊗x_l` in
/// slots `i, j`.
pub fn omega_full(
    space: &TensorSpace,
    i: usize,
    j: usize,
) -> Result<DMatrix<Complex64>, EllipticError> {
    assemble(
        space,
        i,
        j,
        |_, _| Ok(Complex64::new(1.0, 0.0)),
        Complex64::new(1.0, 0.0),
    )
}

/// `r_ij(ζ)` on the full tensor product.
pub fn r_full(
    space: &TensorSpace,
    i: usize,
    j: usize,
    zeta: Complex64,
    h: &[Complex64],
    ctx: &EllipticContext,
) -> Result<DMatrix<Complex64>, EllipticError> {
    check_cartan(h, space.n())?;
    let m = assemble(
        space,
        i,
        j,
        |a, b| g(zeta, h[a] - h[b], ctx),
        -sigma(zeta, ctx)?,
    )?;
    Ok(m * two_pi_i())
}

/// `∂_ζ r_ij(ζ)`, from `∂₁g = −2πiφ` and `σ' = 2πi Σ pⁿz/(1 − pⁿz)²`.
pub fn r_full_dzeta(
    space: &TensorSpace,
    i: usize,
    j: usize,
    zeta: Complex64,
    h: &[Complex64],
    ctx: &EllipticContext,
) -> Result<DMatrix<Complex64>, EllipticError> {
    check_cartan(h, space.n())?;
    let tpi = two_pi_i();
    let m = assemble(
        space,
        i,
        j,
        |a, b| Ok(-tpi * phi(zeta, h[a] - h[b], ctx)?),
        -tpi * sigma_prime_series(zeta, ctx)?,
    )?;
    Ok(m * tpi)
}

/// The derivative of `r_ij(ζ)` along the Cartan direction `dir`, from
/// `∂_X g(ζ, X) = 2πi φ(X, ζ)`.
pub fn r_full_dh(
    space: &TensorSpace,
    i: usize,
    j: usize,
    zeta: Complex64,
    h: &[Complex64],
    dir: &[f64],
    ctx: &EllipticContext,
) -> Result<DMatrix<Complex64>, EllipticError> {
    check_cartan(h, space.n())?;
    ctx.check_pole("r", zeta)?;
    let tpi = two_pi_i();
    let m = assemble(
        space,
        i,
        j,
        |a, b| {
            let slope = dir[a] - dir[b];
            if slope == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            Ok(tpi * phi(h[a] - h[b], zeta, ctx)? * slope)
        },
        Complex64::new(0.0, 0.0),
    )?;
    Ok(m * tpi)
}

/// `r_ij(ζ)` restricted to the zero-weight subspace.
pub fn r_matrix(
    zeta: Complex64,
    h: &[Complex64],
    ctx: &EllipticContext,
    space: &TensorSpace,
    i: usize,
    j: usize,
) -> Result<ConnectionMatrix, EllipticError> {
    Ok(ConnectionMatrix::restricted(
        space,
        &r_full(space, i, j, zeta, h, ctx)?,
    ))
}

/// `Res_{ζ=0} r_ij(ζ)` by the trapezoid rule on a circle, which is
/// spectrally accurate for the Laurent coefficient.
pub fn r_residue(
    space: &TensorSpace,
    i: usize,
    j: usize,
    h: &[Complex64],
    ctx: &EllipticContext,
    radius: f64,
    nodes: usize,
) -> Result<DMatrix<Complex64>, EllipticError> {
    let mut acc = DMatrix::zeros(space.dim(), space.dim());
    for k in 0..nodes {
        let zeta = Complex64::from_polar(radius, 2.0 * PI * k as f64 / nodes as f64);
        acc += r_full(space, i, j, zeta, h, ctx)? * zeta;
    }
    Ok(acc / Complex64::new(nodes as f64, 0.0))
}
