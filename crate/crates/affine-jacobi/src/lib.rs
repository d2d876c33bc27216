//! Affine Jacobi polynomials of type `A_{n-1}^{(1)}` as truncated series.
//!
//! A level-`K` element is `Σ_d p^d f_d` with `p = e^{−δ}` and each `f_d` a
//! finite element of the weight-lattice algebra ([`AffineSeries`]); the
//! `Λ₀` component is the level and is kept implicit.
//!
//! - [`orbit`]: affine Weyl orbits, orbit sums and the invariance check.
//! - [`denominator`]: `δ̂`, the normalized `δ̂′` and Weyl–Kac characters.
//! - [`mhat_apply`]: the operator `M̂_k` by exact root-string collapse.
//! - [`affine_jacobi`]: `Ĵ_λ̂` by a triangular solve in `p`.

pub mod denominator;
mod element;
mod operator;
pub mod orbit;
mod series;

use exact_algebra::AlgebraError;
use root_data::RootDataError;
use thiserror::Error;

pub use denominator::{affine_denominator, normalized_denominator, weyl_kac_character};
pub use element::{affine_jacobi, AffineJacobiElement};
pub use operator::{mhat_apply, shifted_level};
pub use orbit::affine_orbitsum;
pub use series::AffineSeries;

/// Default truncation order.
pub const DEFAULT_ORDER: i64 = 8;

/// Errors raised by the affine layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("critical shift: K + k h = 0 at level {level}, k = {k}")]
    Critical { level: i64, k: String },
    #[error("degenerate spectrum: eigenvalues of {lambda} and {mu} coincide")]
    Degenerate { lambda: String, mu: String },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}
