use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;
pub const TOOL: &str = "lndcert";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpectationResult {
    pub expect: String,
    pub met: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub kind: &'static str,
    pub status: CheckStatus,
    pub expectations: Vec<ExpectationResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

/// Run record. Field order is fixed; `model` is the canonical text of
/// everything that was executed, and `model_digest` is its SHA-256.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub format_version: u32,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub model_digest: String,
    pub model: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: &'static str, model: String, checks: Vec<CheckResult>) -> Self {
        let count = |s: CheckStatus| checks.iter().filter(|c| c.status == s).count();
        let summary = Summary {
            total: checks.len(),
            passed: count(CheckStatus::Pass),
            failed: count(CheckStatus::Fail),
            errors: count(CheckStatus::Error),
        };
        Report {
            format_version: FORMAT_VERSION,
            tool: TOOL,
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            model_digest: format!("sha256:{}", hex::encode(Sha256::digest(model.as_bytes()))),
            model,
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogRun {
    pub id: String,
    pub provenance: String,
    pub report: Report,
}

/// Reports for several catalog entries, in catalog order.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogReport {
    pub format_version: u32,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub entries: Vec<CatalogRun>,
    pub summary: Summary,
}

impl CatalogReport {
    pub fn new(entries: Vec<CatalogRun>) -> Self {
        let mut summary = Summary { total: 0, passed: 0, failed: 0, errors: 0 };
        for e in &entries {
            let s = e.report.summary;
            summary.total += s.total;
            summary.passed += s.passed;
            summary.failed += s.failed;
            summary.errors += s.errors;
        }
        CatalogReport {
            format_version: FORMAT_VERSION,
            tool: TOOL,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: "catalog",
            entries,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
