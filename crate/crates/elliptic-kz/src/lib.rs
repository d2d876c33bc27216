//! Elliptic functions, the elliptic r-matrix and the elliptic KZ connection
//! in double precision, with numerical certification of their identities.
//!
//! - [`functions`]: `θ₁`, `η`, `σ`, `℘`, `g`, `φ`, `φ₀` and their `p`-series.
//! - [`functional`]: affine series evaluated as functions of `(h, u, τ)`.
//! - [`rmatrix`]: `r(ζ)` in tensor products of symmetric powers of `ℂⁿ`.
//! - [`kz`]: the connection, its flatness check and the gauge `ψ`.
//! - [`checks`]: suites producing JSON-ready [`CheckReport`]s.

pub mod checks;
pub mod context;
pub mod functional;
pub mod functions;
pub mod kz;
pub mod lie;
pub mod rmatrix;

use thiserror::Error;

pub use checks::{all_checks, CheckReport, Tolerances};
pub use context::EllipticContext;
pub use functional::{denominator_closed_form, evaluate_affine_series};
pub use functions::{eta, g, phi, phi0, sigma, theta1, wp};
pub use kz::{flatness_check, kz_connection, psi_gauge, FlatnessReport, KzConnection};
pub use lie::{SymRep, TensorSpace};
pub use rmatrix::{r_matrix, ConnectionMatrix};

/// Errors raised by numerical evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EllipticError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{function} has a pole at {arg}")]
    Pole { function: &'static str, arg: String },
    #[error("series did not converge: {0}")]
    Convergence(String),
}
