//! Uniform pass/fail reports for the command line and the test suites.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

/// `{ "check", "q", "status", "details" }`.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub q: u32,
    pub status: Status,
    pub details: Value,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, q: u32, ok: bool, details: impl Serialize) -> Self {
        CheckReport {
            check: check.into(),
            q,
            status: Status::from_bool(ok),
            details: serde_json::to_value(details).expect("report details serialize"),
        }
    }

    /// A failed check carrying an error message.
    pub fn failed(check: impl Into<String>, q: u32, err: &crate::Error) -> Self {
        CheckReport {
            check: check.into(),
            q,
            status: Status::Fail,
            details: serde_json::json!({ "error": err.to_string() }),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
