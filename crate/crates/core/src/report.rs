//! Pass/fail reports shared by the congruence checks and the suites.
//!
//! JSON form:
//!
//! ```text
//! {
//!   "suite": string,
//!   "carrier": string,
//!   "cases_run": integer >= 0,
//!   "violations": [ { "inputs": string, "expected": string, "got": string } ],
//!   "elapsed_ms": integer >= 0,
//!   "status": "pass" | "fail" | "skipped",
//!   "reason": string            (present only when status is "skipped")
//! }
//! ```

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Only the first violations are kept; the status still reflects all of them.
pub const MAX_RECORDED_VIOLATIONS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

impl Violation {
    pub fn new(inputs: impl Into<String>, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        Violation {
            inputs: inputs.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub carrier: String,
    pub cases_run: u64,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
    pub status: Status,
    pub reason: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    suite: String,
    carrier: String,
    cases_run: u64,
    violations: Vec<Violation>,
    elapsed_ms: u64,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    reason: Option<String>,
}

impl Report {
    pub fn skipped(suite: &str, carrier: impl Into<String>, reason: impl Into<String>) -> Report {
        Report {
            suite: suite.to_string(),
            carrier: carrier.into(),
            cases_run: 0,
            violations: Vec::new(),
            elapsed: Duration::ZERO,
            status: Status::Skipped,
            reason: Some(reason.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(ReportJson {
            suite: self.suite.clone(),
            carrier: self.carrier.clone(),
            cases_run: self.cases_run,
            violations: self.violations.clone(),
            elapsed_ms: self.elapsed.as_millis() as u64,
            status: self.status,
            reason: self.reason.clone(),
        })
        .expect("report serializes")
    }

    /// One line of human-readable text.
    pub fn to_text(&self) -> String {
        let mut line = format!(
            "{} {} [{}] cases={} violations={} elapsed={}ms",
            self.status,
            self.suite,
            self.carrier,
            self.cases_run,
            self.violations.len(),
            self.elapsed.as_millis()
        );
        if let Some(reason) = &self.reason {
            line.push_str(&format!(" ({reason})"));
        }
        for v in &self.violations {
            line.push_str(&format!(
                "\n    inputs: {} expected: {} got: {}",
                v.inputs, v.expected, v.got
            ));
        }
        line
    }
}

/// Checks `value` against the report schema above.
pub fn validate_report_json(value: &Value) -> Result<(), String> {
    let obj = value.as_object().ok_or("report is not an object")?;
    let allowed = ["suite", "carrier", "cases_run", "violations", "elapsed_ms", "status", "reason"];
    if let Some(extra) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(format!("unexpected field `{extra}`"));
    }
    for key in ["suite", "carrier"] {
        obj.get(key)
            .and_then(Value::as_str)
            .ok_or(format!("`{key}` must be a string"))?;
    }
    for key in ["cases_run", "elapsed_ms"] {
        obj.get(key)
            .and_then(Value::as_u64)
            .ok_or(format!("`{key}` must be a non-negative integer"))?;
    }
    let status = obj
        .get("status")
        .and_then(Value::as_str)
        .ok_or("`status` must be a string")?;
    if !["pass", "fail", "skipped"].contains(&status) {
        return Err(format!("bad status `{status}`"));
    }
    let violations = obj
        .get("violations")
        .and_then(Value::as_array)
        .ok_or("`violations` must be an array")?;
    for v in violations {
        let v = v.as_object().ok_or("violation is not an object")?;
        if v.len() != 3 {
            return Err("violation must have exactly inputs, expected, got".into());
        }
        for key in ["inputs", "expected", "got"] {
            v.get(key)
                .and_then(Value::as_str)
                .ok_or(format!("violation `{key}` must be a string"))?;
        }
    }
    match (status, violations.is_empty()) {
        ("pass", false) => return Err("pass with violations".into()),
        ("fail", true) => return Err("fail without violations".into()),
        _ => {}
    }
    match (status, obj.get("reason")) {
        ("skipped", Some(Value::String(_))) => {}
        ("skipped", _) => return Err("skipped report needs a string `reason`".into()),
        (_, Some(_)) => return Err("`reason` only allowed on skipped reports".into()),
        _ => {}
    }
    Ok(())
}

/// Accumulates cases and violations for one report.
pub struct Checker {
    suite: String,
    carriers: Vec<String>,
    cases: u64,
    violations: Vec<Violation>,
    failed: bool,
    start: Instant,
}

impl Checker {
    pub fn new(suite: &str) -> Self {
        Checker {
            suite: suite.to_string(),
            carriers: Vec::new(),
            cases: 0,
            violations: Vec::new(),
            failed: false,
            start: Instant::now(),
        }
    }

    pub fn carrier(&mut self, carrier: impl fmt::Display) {
        let c = carrier.to_string();
        if !self.carriers.contains(&c) {
            self.carriers.push(c);
        }
    }

    pub fn cases(&self) -> u64 {
        self.cases
    }

    pub fn is_clean(&self) -> bool {
        !self.failed
    }

    pub fn check(&mut self, ok: bool, violation: impl FnOnce() -> Violation) {
        self.cases += 1;
        if !ok {
            self.fail(violation());
        }
    }

    pub fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        inputs: impl FnOnce() -> String,
        expected: &T,
        got: &T,
    ) {
        self.cases += 1;
        if expected != got {
            self.fail(Violation::new(inputs(), expected, got));
        }
    }

    pub fn fail(&mut self, violation: Violation) {
        self.failed = true;
        if self.violations.len() < MAX_RECORDED_VIOLATIONS {
            self.violations.push(violation);
        }
    }

    /// Merge another checker's cases and violations into this one.
    pub fn absorb(&mut self, report: Report) {
        self.cases += report.cases_run;
        if report.failed() {
            self.failed = true;
        }
        for v in report.violations {
            if self.violations.len() < MAX_RECORDED_VIOLATIONS {
                self.violations.push(v);
            }
        }
    }

    pub fn finish(self) -> Report {
        Report {
            suite: self.suite,
            carrier: self.carriers.join(", "),
            cases_run: self.cases,
            status: if self.failed { Status::Fail } else { Status::Pass },
            violations: self.violations,
            elapsed: self.start.elapsed(),
            reason: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_violations() {
        let mut c = Checker::new("demo");
        c.carrier("B(Z)");
        c.check(true, || unreachable!());
        assert!(c.is_clean());
        let r = c.finish();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.cases_run, 1);
        validate_report_json(&r.to_json()).unwrap();

        let mut c = Checker::new("demo");
        for i in 0..100 {
            c.check_eq(|| format!("case {i}"), &1, &2);
        }
        let r = c.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.violations.len(), MAX_RECORDED_VIOLATIONS);
        validate_report_json(&r.to_json()).unwrap();
    }

    #[test]
    fn schema_rejects_malformed_documents() {
        let good = Report::skipped("s", "B(Z)", "d-group required").to_json();
        validate_report_json(&good).unwrap();
        let mut bad = good.clone();
        bad["status"] = "maybe".into();
        assert!(validate_report_json(&bad).is_err());
        let mut bad = good.clone();
        bad["extra"] = 1.into();
        assert!(validate_report_json(&bad).is_err());
        let mut bad = good;
        bad.as_object_mut().unwrap().remove("reason");
        assert!(validate_report_json(&bad).is_err());
        assert!(validate_report_json(&serde_json::json!([1])).is_err());
    }
}
