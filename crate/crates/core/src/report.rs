//! Machine-readable verifier reports shared by the signature and
//! anisotropy batteries and the CLI.

use serde::Serialize;

/// Outcome of one checked claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Ok,
    Fail,
}

/// One verified claim: `{claim, parameters, expected, computed, status}`.
#[derive(Debug, Clone, Serialize)]
pub struct VerifierReport {
    pub claim: String,
    pub parameters: serde_json::Value,
    pub expected: serde_json::Value,
    pub computed: serde_json::Value,
    pub status: CheckStatus,
}

impl VerifierReport {
    pub fn new(
        claim: impl Into<String>,
        parameters: serde_json::Value,
        expected: serde_json::Value,
        computed: serde_json::Value,
    ) -> Self {
        let status = if expected == computed {
            CheckStatus::Ok
        } else {
            CheckStatus::Fail
        };
        VerifierReport {
            claim: claim.into(),
            parameters,
            expected,
            computed,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Ok
    }
}

/// A batch of reports under one claim id.
#[derive(Debug, Clone, Serialize)]
pub struct ReportSet {
    pub claim: String,
    pub checks: Vec<VerifierReport>,
    pub status: CheckStatus,
}

impl ReportSet {
    pub fn new(claim: impl Into<String>, checks: Vec<VerifierReport>) -> Self {
        let status = if checks.iter().all(VerifierReport::passed) {
            CheckStatus::Ok
        } else {
            CheckStatus::Fail
        };
        ReportSet {
            claim: claim.into(),
            checks,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Ok
    }
}
