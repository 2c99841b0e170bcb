//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    BoundExceeded,
    /// An empirical outcome with no asserted expectation.
    Recorded,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::BoundExceeded => "BOUND_EXCEEDED",
            Status::Recorded => "RECORDED",
        }
    }
}

/// One check. `anchor` names the claim being checked, or `plumbing` for
/// infrastructure checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    pub metrics: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<serde_json::Value>,
}

impl VerificationReport {
    pub fn new(check_id: impl Into<String>, anchor: impl Into<String>, status: Status) -> Self {
        Self {
            check_id: check_id.into(),
            anchor: anchor.into(),
            status,
            metrics: BTreeMap::new(),
            witnesses: None,
        }
    }

    pub fn check(check_id: impl Into<String>, anchor: impl Into<String>, ok: bool) -> Self {
        Self::new(check_id, anchor, Status::from_bool(ok))
    }

    pub fn metric(mut self, name: &str, value: impl Into<f64>) -> Self {
        self.metrics.insert(name.to_string(), value.into());
        self
    }

    pub fn witness(mut self, value: serde_json::Value) -> Self {
        self.witnesses = Some(value);
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// `STATUS check_id: anchor`.
    pub fn summary_line(&self) -> String {
        format!(
            "{:<14} {}  ({})",
            self.status.as_str(),
            self.check_id,
            self.anchor
        )
    }
}

pub fn any_failed(reports: &[VerificationReport]) -> bool {
    reports.iter().any(VerificationReport::failed)
}

/// Pretty JSON array, stable for identical inputs.
pub fn to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
