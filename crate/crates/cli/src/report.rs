//! JSON report documents.
//!
//! Field order follows struct declaration order, so output is stable across runs.
//! Every type rejects unknown fields, which makes a typed round-trip the schema check.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use solvdeg::analyze::AnalysisReport;
use solvdeg::bounds::EghVariant;
use solvdeg::macaulay::{DegreeTrace, SolveReport, StopReason};

pub const TOOL: &str = "solvdeg";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// Hex SHA-256 of the input file, or of the canonical request for commands
    /// without one.
    pub input_sha256: String,
    pub result: ReportBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum ReportBody {
    Bound(BoundResult),
    Solve(SolveDocument),
    Analyze(AnalysisReport),
    Table(TableDocument),
    System(SystemDocument),
    Verify(VerifySummary),
    Error(ErrorDocument),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundQuery {
    Egh,
    Semiregular,
    ClosedForm,
    Macaulay,
    Aci,
    Largerm,
    Inhomog,
    Expansion,
    Shift,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundResult {
    pub query: BoundQuery,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub degrees: Option<Vec<u32>>,
    pub d: Option<u32>,
    pub ell: Option<u64>,
    pub variant: Option<EghVariant>,
    /// `None` when the series never reaches a non-positive coefficient.
    pub value: Option<u64>,
    pub alpha: Option<i64>,
    pub expansion: Option<Vec<(u64, u32)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveDocument {
    pub basis: Vec<String>,
    pub solving_degree: u32,
    pub max_gb_degree: u32,
    pub stop_reason: StopReason,
    pub trace: Vec<DegreeTrace>,
}

impl SolveDocument {
    pub fn new(report: &SolveReport, names: &[String]) -> Self {
        Self {
            basis: report.basis.iter().map(|g| g.render(names)).collect(),
            solving_degree: report.solving_degree,
            max_gb_degree: report.max_gb_degree,
            stop_reason: report.stop_reason,
            trace: report.trace.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub d: u32,
    pub ks: Vec<usize>,
    pub ns: Vec<usize>,
    pub entries: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub seed: u64,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifySummary {
    pub items: Vec<VerifyItem>,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorDocument {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
    /// Per-degree trace for solver failures.
    pub trace: Option<Vec<DegreeTrace>>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl ReportDocument {
    pub fn new(command: &str, input: &[u8], result: ReportBody) -> Self {
        Self {
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input_sha256: sha256_hex(input),
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_digest() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let doc = ReportDocument::new(
            "bound",
            b"",
            ReportBody::Error(ErrorDocument {
                kind: "usage".into(),
                message: "m".into(),
                exit_code: 2,
                trace: None,
            }),
        );
        let json = doc.to_json();
        assert_eq!(ReportDocument::from_json(&json).unwrap(), doc);
        let extra = json.replacen("\"tool\"", "\"extra\": 1, \"tool\"", 1);
        assert!(ReportDocument::from_json(&extra).is_err());
        let inner = json.replacen("\"message\"", "\"extra\": 1, \"message\"", 1);
        assert!(ReportDocument::from_json(&inner).is_err());
    }
}
