//! Suite reports: one entry per group (or group pair) with a verdict,
//! machine-readable skip reasons, evidence values, and failure witnesses.
//! JSON output is deterministic: struct field order is fixed, evidence maps
//! are sorted, and no timestamps or timings are recorded.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Inconclusive,
}

/// Machine-readable tag for a skipped entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkipTag {
    /// The object is too small for the statement to say anything.
    Degenerate,
    /// A theorem hypothesis does not hold for this group.
    HypothesisFailed,
    /// An enumeration or search bound was exceeded.
    Budget,
    /// The group could not be built or prepared.
    Error,
}

impl SkipTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SkipTag::Degenerate => "degenerate",
            SkipTag::HypothesisFailed => "hypothesis-failed",
            SkipTag::Budget => "budget",
            SkipTag::Error => "error",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    /// Group name, or "a,b" for pair entries.
    pub group: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub evidence: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Entry {
    fn new(group: impl Into<String>, verdict: Verdict) -> Self {
        Entry {
            group: group.into(),
            verdict,
            reason: None,
            evidence: BTreeMap::new(),
            witness: None,
        }
    }

    pub fn pass(group: impl Into<String>) -> Self {
        Entry::new(group, Verdict::Pass)
    }

    pub fn fail(group: impl Into<String>, witness: Value) -> Self {
        let mut e = Entry::new(group, Verdict::Fail);
        e.witness = Some(witness);
        e
    }

    pub fn skipped(group: impl Into<String>, tag: SkipTag, detail: impl Into<String>) -> Self {
        let mut e = Entry::new(group, Verdict::Skipped);
        e.reason = Some(tag.as_str().to_string());
        let detail = detail.into();
        if !detail.is_empty() {
            e.evidence.insert("detail".into(), Value::String(detail));
        }
        e
    }

    pub fn inconclusive(group: impl Into<String>, detail: impl Into<String>) -> Self {
        let mut e = Entry::new(group, Verdict::Inconclusive);
        e.reason = Some("timeout".into());
        let detail = detail.into();
        if !detail.is_empty() {
            e.evidence.insert("detail".into(), Value::String(detail));
        }
        e
    }

    /// Builder-style evidence insertion.
    pub fn ev(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.evidence.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            suite: suite.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == v).count()
    }

    pub fn has_fail(&self) -> bool {
        self.count(Verdict::Fail) > 0
    }

    pub fn has_inconclusive(&self) -> bool {
        self.count(Verdict::Inconclusive) > 0
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# suite {}\n", self.suite);
        for e in &self.entries {
            let verdict = match e.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "skipped",
                Verdict::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!("{verdict:<12} {}", e.group));
            if let Some(r) = &e.reason {
                out.push_str(&format!("  reason={r}"));
            }
            for (k, v) in &e.evidence {
                out.push_str(&format!("  {k}={}", compact(v)));
            }
            if let Some(w) = &e.witness {
                out.push_str(&format!("  witness={}", compact(w)));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "# result: {} pass, {} fail, {} skipped, {} inconclusive\n",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Skipped),
            self.count(Verdict::Inconclusive),
        ));
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Exit code over a batch of reports: 1 if anything failed, else 3 if
/// anything was inconclusive, else 0.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(Report::has_fail) {
        1
    } else if reports.iter().any(Report::has_inconclusive) {
        3
    } else {
        0
    }
}

/// Render a batch as deterministic pretty JSON: a single object for one
/// report, an array for several.
pub fn to_json(reports: &[Report]) -> String {
    let text = if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(reports)
    };
    text.expect("report serialization cannot fail")
}
