//! JSON verdict records.

use serde::{Deserialize, Serialize};

use crate::classify::BpsiVerdict;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub order: u64,
    pub psi: u64,
}

/// One decided (or undecided) group. `verdict` is `"true"`, `"false"` or
/// `"unknown"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub spec: String,
    pub order: u64,
    pub psi: Option<u64>,
    pub verdict: String,
    pub method: String,
    pub witness: Option<WitnessRecord>,
    pub elapsed_ms: u64,
}

impl VerdictRecord {
    pub fn from_verdict(spec: &str, psi: Option<u64>, v: &BpsiVerdict, elapsed_ms: u64) -> Self {
        VerdictRecord {
            spec: spec.to_string(),
            order: v.order as u64,
            psi,
            verdict: v.is_bpsi.to_string(),
            method: v.method.to_string(),
            witness: v.witness.as_ref().map(|w| WitnessRecord {
                order: w.order as u64,
                psi: w.psi,
            }),
            elapsed_ms,
        }
    }

    pub fn unknown(spec: &str, order: u64, psi: Option<u64>, elapsed_ms: u64) -> Self {
        VerdictRecord {
            spec: spec.to_string(),
            order,
            psi,
            verdict: "unknown".into(),
            method: "none".into(),
            witness: None,
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}
