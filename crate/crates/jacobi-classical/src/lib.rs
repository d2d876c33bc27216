//! Jacobi (Heckman–Opdam) polynomials of type `A_{n-1}`.
//!
//! `J_λ` is the unitriangular eigenvector of the operator
//! `M_k = Δ_h − 2k Σ_{α>0} (1 − e^α)^{-1} ∂_α + 2k ∂_ρ`
//! on `W`-invariant elements of the weight-lattice algebra. Coefficients
//! live in `ℚ(k)`, with `k` either formal or a fixed rational.
//!
//! - [`sutherland_mk_apply`]: the operator, by exact root-string reduction.
//! - [`jacobi_poly`]: `J_λ` by triangular eigen-solve.
//! - [`macdonald_to_jack_limit`]: `P_λ(q, q^k)` at `q → 1`.
//! - [`classical_inner_product`]: `⟨f, g⟩_k = ⟨f δ^k, g δ^k⟩_0`.

mod element;
mod inner;
mod operator;

use std::fmt;
use std::str::FromStr;

use exact_algebra::{AlgebraError, RatFunc, Var};
use macdonald_core::MacdonaldError;
use num_bigint::BigInt;
use num_rational::Rational64;
use root_data::{parse_rational, RootDataError};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use element::{jacobi_poly, macdonald_to_jack_limit, JacobiElement};
pub use inner::classical_inner_product;
pub use operator::{mk_eigenvalue, sutherland_mk_apply};

/// Errors raised by the Jacobi layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacobiError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate spectrum: eigenvalues of {lambda} and {mu} coincide")]
    Degenerate { lambda: String, mu: String },
    #[error("limit failure: {0}")]
    Limit(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Macdonald(#[from] MacdonaldError),
}

/// The coupling `k`: a formal variable or a fixed rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KParam {
    Formal,
    Value(Rational64),
}

impl KParam {
    pub fn integer(k: i64) -> Self {
        KParam::Value(Rational64::from_integer(k))
    }

    /// `k` as an element of `ℚ(k)`.
    pub fn as_ratfunc(&self) -> RatFunc {
        match self {
            KParam::Formal => RatFunc::k_var(),
            KParam::Value(r) => {
                RatFunc::from_ratio(*r.numer(), *r.denom()).expect("nonzero denominator")
            }
        }
    }

    /// Substitute this value of `k` into a coefficient; the identity for
    /// [`KParam::Formal`].
    pub fn specialize(&self, c: &RatFunc) -> Result<RatFunc, AlgebraError> {
        match self {
            KParam::Formal => Ok(c.clone()),
            KParam::Value(r) => {
                c.subs_rational(Var::K, &BigInt::from(*r.numer()), &BigInt::from(*r.denom()))
            }
        }
    }
}

impl fmt::Display for KParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KParam::Formal => write!(f, "formal"),
            KParam::Value(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for KParam {
    type Err = JacobiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "formal" {
            return Ok(KParam::Formal);
        }
        Ok(KParam::Value(parse_rational(s)?))
    }
}

impl Serialize for KParam {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for KParam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
