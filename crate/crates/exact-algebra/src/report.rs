//! Structured outcome of an identity check.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Both sides of an identity together with the verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub inputs: Value,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    /// Set when the identity could not be decided at this specialization.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub inconclusive: bool,
}

impl IdentityReport {
    /// Compare two values by equality and record their text forms.
    pub fn compare<T: PartialEq + std::fmt::Display>(
        identity: &str,
        inputs: Value,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            inputs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal: lhs == rhs,
            inconclusive: false,
        }
    }

    /// A report for an identity that could not be evaluated.
    pub fn inconclusive(identity: &str, inputs: Value, reason: &str) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            inputs,
            lhs: reason.to_string(),
            rhs: String::new(),
            equal: false,
            inconclusive: true,
        }
    }
}
