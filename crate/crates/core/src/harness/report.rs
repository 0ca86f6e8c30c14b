use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::invariants::{ExactRatio, PrimeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Counterexample,
    Skipped,
    /// A recomputed value differs from the printed one. Informational.
    #[serde(rename = "paper-value-mismatch")]
    PrintedValueMismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Verified => "verified",
            Self::Counterexample => "counterexample",
            Self::Skipped => "skipped",
            Self::PrintedValueMismatch => "paper-value-mismatch",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A number recorded alongside a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(u64),
    Ratio(ExactRatio),
}

impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Self::Int(n)
    }
}

impl From<ExactRatio> for Value {
    fn from(r: ExactRatio) -> Self {
        Self::Ratio(r)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Int(n) => write!(f, "{n}"),
            Self::Ratio(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub group: String,
    pub pi: Option<PrimeSet>,
    pub status: Status,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    /// Whether the premise held, so the conclusion was actually tested.
    pub fired: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn new(check_id: &str, group: &str, pi: Option<&PrimeSet>) -> Self {
        Self {
            check_id: check_id.to_string(),
            group: group.to_string(),
            pi: pi.cloned(),
            status: Status::Verified,
            lhs: None,
            rhs: None,
            fired: false,
            detail: String::new(),
        }
    }

    pub fn values(mut self, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        self.lhs = Some(lhs.into());
        self.rhs = Some(rhs.into());
        self
    }

    pub fn vacuous(mut self) -> Self {
        self.fired = false;
        self.status = Status::Verified;
        self.detail = "premise false".into();
        self
    }

    /// Verified if `failures` is empty, else a counterexample listing them.
    pub fn conclude(mut self, failures: Vec<String>, note: impl Into<String>) -> Self {
        self.fired = true;
        if failures.is_empty() {
            self.status = Status::Verified;
            self.detail = note.into();
        } else {
            self.status = Status::Counterexample;
            self.detail = failures.join("; ");
        }
        self
    }

    pub fn skipped(mut self, reason: impl fmt::Display) -> Self {
        self.status = Status::Skipped;
        self.fired = false;
        self.detail = reason.to_string();
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub evaluated: u64,
    pub fired: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: u64,
    pub verified: u64,
    pub counterexample: u64,
    pub skipped: u64,
    pub printed_value_mismatch: u64,
    pub by_check: BTreeMap<String, CheckTally>,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Self::default();
        for r in results {
            s.total += 1;
            match r.status {
                Status::Verified => s.verified += 1,
                Status::Counterexample => s.counterexample += 1,
                Status::Skipped => s.skipped += 1,
                Status::PrintedValueMismatch => s.printed_value_mismatch += 1,
            }
            let tally = s.by_check.entry(r.check_id.clone()).or_default();
            tally.evaluated += 1;
            tally.fired += u64::from(r.fired);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub catalogue_version: String,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, results: Vec<CheckResult>) -> Self {
        Self {
            suite: suite.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            catalogue_version: crate::constructions::CATALOGUE_VERSION.to_string(),
            summary: Summary::of(&results),
            results,
        }
    }

    pub fn has_counterexample(&self) -> bool {
        self.summary.counterexample > 0
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record([
                "check_id", "group", "pi", "status", "lhs", "rhs", "fired", "detail",
            ])
            .expect("in-memory write");
        let show = |v: &Option<Value>| v.as_ref().map(ToString::to_string).unwrap_or_default();
        for r in &self.results {
            writer
                .write_record([
                    r.check_id.as_str(),
                    r.group.as_str(),
                    &r.pi.as_ref().map(ToString::to_string).unwrap_or_default(),
                    r.status.as_str(),
                    &show(&r.lhs),
                    &show(&r.rhs),
                    if r.fired { "true" } else { "false" },
                    r.detail.as_str(),
                ])
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} (version {}, catalogue {})",
            self.suite, self.version, self.catalogue_version
        );
        for r in &self.results {
            let pi =
                r.pi.as_ref()
                    .map(|p| format!(" pi={p}"))
                    .unwrap_or_default();
            let values = match (&r.lhs, &r.rhs) {
                (Some(l), Some(rv)) => format!(" [{l} vs {rv}]"),
                _ => String::new(),
            };
            let _ = writeln!(
                out,
                "{:<20} {:<34} {}{}{} {}",
                r.status, r.check_id, r.group, pi, values, r.detail
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "total {}: {} verified, {} counterexample, {} skipped, {} printed-value mismatch",
            s.total, s.verified, s.counterexample, s.skipped, s.printed_value_mismatch
        );
        out
    }
}
