//! Structured verification results.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

/// One verified instance. `witness` is empty on pass; otherwise it holds
/// the rendered difference (or error) for each failing check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Map<String, Value>,
    pub status: Status,
    pub witness: String,
    pub elapsed_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `key=value` pairs in insertion order.
    pub fn param_summary(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Accumulates the individual checks of one instance.
#[derive(Debug)]
pub struct Check {
    suite: String,
    params: Map<String, Value>,
    failures: Vec<String>,
    data: Option<Value>,
    started: Instant,
}

impl Check {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            params: Map::new(),
            failures: Vec::new(),
            data: None,
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Exact equality; the witness is `lhs − rhs`.
    pub fn elements(&mut self, label: &str, lhs: &WeylElement, rhs: &WeylElement) -> bool {
        let diff = lhs - rhs;
        if diff.is_zero() {
            return true;
        }
        self.failures.push(format!("{label}: {diff}"));
        false
    }

    pub fn holds(&mut self, label: &str, ok: bool, detail: impl FnOnce() -> String) -> bool {
        if !ok {
            self.failures.push(format!("{label}: {}", detail()));
        }
        ok
    }

    pub fn set_data(&mut self, data: Value) {
        self.data = Some(data);
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    /// Runs `body`; an `Err` turns the report into `status: error`.
    pub fn run(mut self, body: impl FnOnce(&mut Check) -> Result<()>) -> VerificationReport {
        match body(&mut self) {
            Ok(()) => self.finish(),
            Err(e) => self.abort(&e),
        }
    }

    pub fn finish(self) -> VerificationReport {
        let status = if self.failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        let witness = self.failures.join("; ");
        self.build(status, witness)
    }

    pub fn abort(self, err: &Error) -> VerificationReport {
        let witness = err.to_string();
        self.build(Status::Error, witness)
    }

    fn build(self, status: Status, witness: String) -> VerificationReport {
        VerificationReport {
            suite: self.suite,
            params: self.params,
            status,
            witness,
            elapsed_ms: Some(self.started.elapsed().as_secs_f64() * 1e3),
            data: self.data,
        }
    }
}
