//! Verification records, serialized one per line as JSON.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::integrate::{IdentityCheck, ScaledExact};
use crate::poly::SparsePoly;

/// Pass/fail record for one instance of an identity.
///
/// Serializes as
/// `{"identity":…,"params":{…},"lhs":…,"rhs":…,"pi_power":k,"pass":…}`;
/// inequality checks add a trailing `"relation"` field.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Map<String, Value>,
    pub lhs: String,
    pub rhs: String,
    pub pi_power: i32,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
}

/// Builder-style parameter list; keys keep insertion order.
#[derive(Debug, Clone, Default)]
pub struct Params(Map<String, Value>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn text(self, key: &str, value: impl ToString) -> Self {
        self.with(key, value.to_string())
    }
}

fn side_text(x: &ScaledExact, pi_power: i32) -> String {
    if x.pi_power() == pi_power || x.is_zero() {
        x.coeff().to_string()
    } else {
        x.to_string()
    }
}

impl VerificationReport {
    /// Exact equality of two scaled values; a mismatched π power renders
    /// the offending side with its own power.
    pub fn equality(identity: &str, params: Params, lhs: &ScaledExact, rhs: &ScaledExact) -> Self {
        let pi_power = if rhs.is_zero() {
            lhs.pi_power()
        } else {
            rhs.pi_power()
        };
        VerificationReport {
            identity: identity.to_string(),
            params: params.0,
            lhs: side_text(lhs, pi_power),
            rhs: side_text(rhs, pi_power),
            pi_power,
            pass: lhs == rhs,
            relation: None,
        }
    }

    pub fn check(identity: &str, params: Params, check: &IdentityCheck) -> Self {
        VerificationReport::equality(identity, params, &check.lhs, &check.rhs)
    }

    pub fn polynomials(identity: &str, params: Params, lhs: &SparsePoly, rhs: &SparsePoly) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params: params.0,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pi_power: 0,
            pass: lhs == rhs,
            relation: None,
        }
    }

    /// Compares two already rendered values.
    pub fn texts(identity: &str, params: Params, lhs: String, rhs: String) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params: params.0,
            pass: lhs == rhs,
            lhs,
            rhs,
            pi_power: 0,
            relation: None,
        }
    }

    /// A record whose verdict is computed by the caller, e.g. `value > 0`.
    pub fn relation(
        identity: &str,
        params: Params,
        lhs: &ScaledExact,
        relation: &str,
        rhs: &str,
        pass: bool,
    ) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params: params.0,
            lhs: lhs.coeff().to_string(),
            rhs: rhs.to_string(),
            pi_power: lhs.pi_power(),
            pass,
            relation: Some(relation.to_string()),
        }
    }

    /// A failed record for a case that raised an error instead of a value.
    pub fn error(identity: &str, params: Params, message: impl ToString) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params: params.0,
            lhs: format!("error: {}", message.to_string()),
            rhs: String::new(),
            pi_power: 0,
            pass: false,
            relation: None,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
