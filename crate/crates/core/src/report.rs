//! Deterministic run reports: a header carrying the only non-reproducible
//! fields (timestamp, wall times), and a body whose JSON serialization is
//! byte-identical across runs with the same inputs and seeds.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn pass(name: &str) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Pass,
            residual: None,
            witnesses: Vec::new(),
            detail: None,
        }
    }

    pub fn fail(name: &str) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Fail,
            residual: None,
            witnesses: Vec::new(),
            detail: None,
        }
    }

    pub fn with_residual(mut self, r: f64) -> Self {
        self.residual = Some(r);
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }

    pub fn gated(name: &str, ok: bool) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name)
        }
    }

    pub fn residual_check(name: &str, residual: f64, tol: f64) -> Self {
        Self::gated(name, residual < tol).with_residual(residual)
    }
}

/// Non-reproducible run metadata, isolated from the deterministic body.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct ReportHeader {
    pub tool: String,
    pub version: String,
    pub timestamp: String,
    /// Wall time per check, milliseconds.
    pub wall_time_ms: BTreeMap<String, u128>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub header: ReportHeader,
    pub schema_version: u32,
    pub seed: u64,
    pub inputs: BTreeMap<String, String>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(tool: &str, seed: u64) -> Self {
        Report {
            header: ReportHeader {
                tool: tool.into(),
                version: env!("CARGO_PKG_VERSION").into(),
                timestamp: String::new(),
                wall_time_ms: BTreeMap::new(),
            },
            schema_version: crate::io::SCHEMA_VERSION,
            seed,
            inputs: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    /// The deterministic body: everything except the header.
    pub fn body_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema_version": self.schema_version,
            "seed": self.seed,
            "inputs": self.inputs,
            "checks": serde_json::to_value(&self.checks).expect("serializable"),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// CSV summary: one line per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,status,residual,witnesses\n");
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::Error => "error",
            };
            let residual = c.residual.map(|r| format!("{r:.6e}")).unwrap_or_default();
            let witnesses = c.witnesses.join(" | ").replace(',', ";");
            out.push_str(&format!("{},{status},{residual},{witnesses}\n", c.name));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn body_is_deterministic_and_header_isolated() {
        let mut a = Report::new("demo", 42);
        a.inputs.insert("group".into(), "inn-s3".into());
        a.checks
            .push(CheckResult::residual_check("ybe", 1e-13, 1e-10));
        let mut b = a.clone();
        b.header.timestamp = "sometime".into();
        b.header.wall_time_ms.insert("ybe".into(), 12);
        assert_eq!(a.body_json(), b.body_json());
        assert_ne!(a.to_json(), b.to_json());
    }

    #[test]
    fn csv_has_one_line_per_check() {
        let mut r = Report::new("demo", 0);
        r.checks.push(CheckResult::pass("a"));
        r.checks.push(CheckResult::fail("b").with_residual(0.5));
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.contains("a,pass"));
        assert!(csv.contains("b,fail,5.0"));
    }
}
