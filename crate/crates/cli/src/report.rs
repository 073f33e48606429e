//! Verification reports and their JSON form.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

/// Version of the JSON report layout; see `docs/report-schema.md`.
pub const SCHEMA_VERSION: u32 = 1;

/// One checked value.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub labels: Vec<String>,
    pub expected: String,
    pub computed: String,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

/// The outcome of one verification target for one parameter choice.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub version: u32,
    pub target: String,
    pub params: BTreeMap<String, i64>,
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
    pub runtime_ms: u128,
    /// Observations that are reported but not checked.
    pub notes: Vec<String>,
    #[serde(skip)]
    started: Option<Instant>,
}

impl VerificationReport {
    pub fn new(target: impl Into<String>, params: BTreeMap<String, i64>) -> Self {
        VerificationReport {
            version: SCHEMA_VERSION,
            target: target.into(),
            params,
            rows: Vec::new(),
            summary: Summary::default(),
            runtime_ms: 0,
            notes: Vec::new(),
            started: Some(Instant::now()),
        }
    }

    /// Records `expected == computed` compared on their text forms.
    pub fn check(&mut self, labels: &[&str], expected: impl Display, computed: impl Display) -> bool {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let matched = expected == computed;
        if matched {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.rows.push(ReportRow { labels: labels.iter().map(|s| s.to_string()).collect(), expected, computed, matched });
        matched
    }

    /// As [`check`](Self::check), with a failed computation recorded as a
    /// mismatch carrying the error text.
    pub fn check_result<T: Display, E: Display>(
        &mut self,
        labels: &[&str],
        expected: impl Display,
        computed: Result<T, E>,
    ) -> bool {
        match computed {
            Ok(v) => self.check(labels, expected, v),
            Err(err) => self.check(labels, expected, format!("error: {err}")),
        }
    }

    /// Records a condition that must hold.
    pub fn check_true(&mut self, labels: &[&str], holds: bool) -> bool {
        self.check(labels, true, holds)
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Stamps the runtime.
    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.runtime_ms = t.elapsed().as_millis();
        }
        self
    }

    /// Human-readable form: a header line, then each mismatch.
    pub fn render(&self, verbose: bool) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = if self.passed() { "ok" } else { "MISMATCH" };
        let mut out = format!(
            "{} [{}] {}: {} passed, {} failed ({} ms)\n",
            self.target,
            params.join(" "),
            status,
            self.summary.passed,
            self.summary.failed,
            self.runtime_ms
        );
        for row in self.rows.iter().filter(|r| verbose || !r.matched) {
            let mark = if row.matched { "  ok" } else { "  FAIL" };
            out.push_str(&format!(
                "{mark} {}: expected {}, computed {}\n",
                row.labels.join(" / "),
                row.expected,
                row.computed
            ));
        }
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_json_field_names() {
        let mut r = VerificationReport::new("demo", BTreeMap::from([("e".to_string(), 2)]));
        assert!(r.check(&["a"], 1, 1));
        assert!(!r.check(&["b"], "v", "v^3"));
        let r = r.finish();
        assert!(!r.passed());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["version"], SCHEMA_VERSION);
        assert_eq!(json["rows"][1]["match"], false);
        assert_eq!(json["summary"]["passed"], 1);
    }
}
