//! Exact algebra for Macdonald-type computations.
//!
//! - [`Poly`]: sparse integer Laurent polynomials in `q`, `t`, `k` with a
//!   multivariate GCD.
//! - [`RatFunc`]: canonical rational functions over `ℚ` in `q^{1/d}`, `t`
//!   and `k`, with substitutions and the limit `q → 1`.
//! - [`LatticePoly`]: the group algebra of the weight lattice with the bar
//!   involution, constant term, Weyl action and exact root-factor division.
//! - [`weyl`]: orbit sums, the Weyl denominator, characters, `q`-dimensions.

mod lattice;
mod poly;
mod ratfunc;
mod report;
mod ring;
pub mod text;
pub mod weyl;

use root_data::RootDataError;
use thiserror::Error;

pub use lattice::{LatticePoly, TermRecord};
pub use poly::{gcd, Exps, Poly, Var, NVARS};
pub use ratfunc::RatFunc;
pub use report::IdentityReport;
pub use ring::{Field, Ring};

/// Errors from exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("odd power of t in {0}; no Macdonald-convention form")]
    Convention(String),
    #[error("not Weyl-invariant: {0}")]
    NotInvariant(String),
    #[error("inexact division {0}")]
    InexactDivision(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}
