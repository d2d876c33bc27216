//! Macdonald polynomials of type `A_{n-1}`.
//!
//! Everything runs in the `gl_n` picture: symmetric polynomials are maps
//! from partitions to coefficients on the monomial symmetric basis
//! ([`SymPoly`]), and the `sl_n` element is recovered by projecting each
//! partition to its weight. Conventions: the operators shift by `q²` and
//! carry `t²`, so `P_λ(q, t)` here is Macdonald's `P_λ(q², t²)`.
//!
//! - [`operator`]: the difference operators `M_r` and their eigenvalues.
//! - [`macdonald_poly`]: `P_λ` by triangular eigen-solve against `M_1`.
//! - [`inner`]: the inner product at `t = q^k` and the function `φ₀`.
//! - [`verify`]: norm, symmetry, special-value and orthogonality checks.

mod element;
mod glpoly;
pub mod inner;
pub mod operator;
mod partition;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;

use exact_algebra::{AlgebraError, Poly, RatFunc};
use root_data::RootDataError;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use element::{macdonald_poly, MacdonaldBasisElement};
pub use inner::{inner_product_k, phi0, sym_inner_product};
pub use operator::{macdonald_eigenvalue, macdonald_op_apply};
pub use partition::Partition;

/// A symmetric polynomial on the monomial symmetric basis.
pub type SymPoly = BTreeMap<Partition, RatFunc>;

/// Errors raised by the Macdonald layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacdonaldError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate spectrum: eigenvalues of {lambda} and {mu} coincide")]
    Degenerate { lambda: String, mu: String },
    #[error("unsupported mode: {0}")]
    Unsupported(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Whether `t` stays symbolic or is specialized to `q^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Generic,
    TEqQk(i64),
}

impl Mode {
    /// Specialize an integer polynomial in `q`, `t` to this mode.
    pub fn specialize(&self, p: &Poly) -> RatFunc {
        match *self {
            Mode::Generic => RatFunc::from_poly(p.clone(), 1),
            Mode::TEqQk(k) => RatFunc::from_poly(p.map_exps(|e| [e[0] + k * e[1], 0, e[2]]), 1),
        }
    }

    /// The integer `k` of `t = q^k`, if specialized.
    pub fn k(&self) -> Option<i64> {
        match *self {
            Mode::Generic => None,
            Mode::TEqQk(k) => Some(k),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Generic => write!(f, "generic"),
            Mode::TEqQk(k) => write!(f, "t=q^{k}"),
        }
    }
}

/// Require `k ≥ 1` for the finite inner-product kernel.
pub(crate) fn check_positive_k(k: i64) -> Result<(), MacdonaldError> {
    if k < 1 {
        return Err(MacdonaldError::Unsupported(format!(
            "inner products need a positive integer k, got {k}"
        )));
    }
    Ok(())
}
