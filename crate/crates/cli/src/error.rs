//! Error classes and their exit codes.

use affine_jacobi::AffineError;
use elliptic_kz::EllipticError;
use exact_algebra::AlgebraError;
use jacobi_classical::JacobiError;
use macdonald_core::MacdonaldError;
use root_data::RootDataError;
use serde_json::json;
use thiserror::Error;

/// Exit code of a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code when a verification suite ran and some identity failed.
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
/// Exit code for arguments that fail validation.
pub const EXIT_INVALID_INPUT: i32 = 2;
/// Exit code for internal and exactness errors.
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID_INPUT,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    /// The machine-readable form written to stderr.
    pub fn to_json(&self) -> serde_json::Value {
        let (kind, message) = match self {
            CliError::Invalid(m) => ("invalid_input", m),
            CliError::Internal(m) => ("internal", m),
        };
        json!({"error": kind, "message": message, "exit_code": self.exit_code()})
    }
}

impl From<RootDataError> for CliError {
    fn from(e: RootDataError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse(_) | AlgebraError::Convention(_) | AlgebraError::RootData(_) => {
                CliError::Invalid(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<MacdonaldError> for CliError {
    fn from(e: MacdonaldError) -> Self {
        match e {
            MacdonaldError::Domain(_) | MacdonaldError::Unsupported(_) => {
                CliError::Invalid(e.to_string())
            }
            MacdonaldError::Degenerate { .. } | MacdonaldError::Internal(_) => {
                CliError::Internal(e.to_string())
            }
            MacdonaldError::Algebra(a) => a.into(),
            MacdonaldError::RootData(r) => r.into(),
        }
    }
}

impl From<JacobiError> for CliError {
    fn from(e: JacobiError) -> Self {
        match e {
            JacobiError::Domain(_) => CliError::Invalid(e.to_string()),
            JacobiError::Degenerate { .. } | JacobiError::Limit(_) | JacobiError::Internal(_) => {
                CliError::Internal(e.to_string())
            }
            JacobiError::Algebra(a) => a.into(),
            JacobiError::RootData(r) => r.into(),
            JacobiError::Macdonald(m) => m.into(),
        }
    }
}

impl From<AffineError> for CliError {
    fn from(e: AffineError) -> Self {
        match e {
            AffineError::Domain(_) | AffineError::Unsupported(_) | AffineError::Critical { .. } => {
                CliError::Invalid(e.to_string())
            }
            AffineError::Degenerate { .. } | AffineError::Internal(_) => {
                CliError::Internal(e.to_string())
            }
            AffineError::Algebra(a) => a.into(),
            AffineError::RootData(r) => r.into(),
        }
    }
}

impl From<EllipticError> for CliError {
    fn from(e: EllipticError) -> Self {
        match e {
            EllipticError::Domain(_) | EllipticError::Pole { .. } => {
                CliError::Invalid(e.to_string())
            }
            EllipticError::Convergence(_) => CliError::Internal(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_class() {
        let bad: CliError = MacdonaldError::Domain("x".into()).into();
        assert_eq!(bad.exit_code(), EXIT_INVALID_INPUT);
        let inexact: CliError = AlgebraError::InexactDivision("x".into()).into();
        assert_eq!(inexact.exit_code(), EXIT_INTERNAL);
        let critical: CliError = AffineError::Critical {
            level: 1,
            k: "-1/2".into(),
        }
        .into();
        assert_eq!(critical.exit_code(), EXIT_INVALID_INPUT);
        let js = bad.to_json();
        assert_eq!(js["error"], "invalid_input");
        assert_eq!(js["exit_code"], 2);
    }
}
