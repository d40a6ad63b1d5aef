//! Check outcomes and run reports.

use serde::{Deserialize, Serialize};

/// Outcome of one property check.
///
/// When `holds` is false, `witness` names the elements (or sets, rendered as
/// `{a,b}`) at which the defining condition fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub property: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub details: String,
}

impl CheckReport {
    pub fn pass(property: impl Into<String>) -> Self {
        CheckReport {
            property: property.into(),
            holds: true,
            witness: Vec::new(),
            details: String::new(),
        }
    }

    pub fn fail(
        property: impl Into<String>,
        witness: Vec<String>,
        details: impl Into<String>,
    ) -> Self {
        CheckReport {
            property: property.into(),
            holds: false,
            witness,
            details: details.into(),
        }
    }

    pub fn with_details(mut self, details: impl Into<String>) -> Self {
        self.details = details.into();
        self
    }

    /// Pass iff every report passes; the first failing report is kept.
    pub fn all(
        property: impl Into<String>,
        reports: impl IntoIterator<Item = CheckReport>,
    ) -> Self {
        let property = property.into();
        for r in reports {
            if !r.holds {
                return CheckReport {
                    property,
                    holds: false,
                    witness: r.witness,
                    details: format!("{}: {}", r.property, r.details),
                };
            }
        }
        CheckReport::pass(property)
    }
}

pub const REPORT_SCHEMA: &str = "dmposet-report/1";

/// Result of one CLI invocation, serialized as JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub tool_version: String,
    pub command: String,
    /// SHA-256 of the input document text.
    pub input_digest: String,
    pub checks: Vec<ReportEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Vec<(String, f64)>>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportEntry {
    #[serde(flatten)]
    pub report: CheckReport,
    /// Expected verdict when the input document records one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    /// Shown but never counted toward the exit status.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

impl ReportEntry {
    pub fn passed(&self) -> bool {
        self.informational || self.report.holds == self.expected.unwrap_or(true)
    }
}

impl RunReport {
    pub fn new(command: impl Into<String>, input_digest: impl Into<String>) -> Self {
        RunReport {
            schema: REPORT_SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            input_digest: input_digest.into(),
            checks: Vec::new(),
            timings_ms: None,
            passed: true,
        }
    }

    pub fn push(&mut self, report: CheckReport, expected: Option<bool>) {
        let entry = ReportEntry {
            report,
            expected,
            informational: false,
        };
        self.passed &= entry.passed();
        self.checks.push(entry);
    }

    pub fn push_info(&mut self, report: CheckReport) {
        self.checks.push(ReportEntry {
            report,
            expected: None,
            informational: true,
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
