use super::{Expect, Identity, SuiteConfig};
use std::fmt::Write;

pub const REPORT_SCHEMA: &str = "cychains-report/1";

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct IdentityRecord {
    pub id: String,
    pub suite: String,
    pub location: String,
    pub scope: String,
    /// `pass` or `fail`: what the identity is expected to do.
    pub expected: String,
    /// `pass`, `fail` or `error`.
    pub observed: String,
    /// Observed matches expected.
    pub ok: bool,
    pub trials: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_trial: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl IdentityRecord {
    pub(super) fn new(ident: &Identity) -> Self {
        IdentityRecord {
            id: ident.id.to_string(),
            suite: ident.suite.as_str().to_string(),
            location: ident.location.to_string(),
            scope: ident.scope.clone(),
            expected: match ident.expect {
                Expect::Pass => "pass",
                Expect::Fail => "fail",
            }
            .to_string(),
            observed: String::new(),
            ok: false,
            trials: 0,
            failing_trial: None,
            counterexample: None,
            detail: None,
            table: None,
            elapsed_ms: None,
        }
    }

    fn settle(&mut self, observed: &str) {
        self.observed = observed.to_string();
        self.ok = observed == self.expected;
    }

    pub(super) fn set_pass(&mut self) {
        self.settle("pass");
    }

    pub(super) fn set_failure(&mut self, trial: usize, inputs: Vec<String>) {
        self.failing_trial = Some(trial);
        self.counterexample = Some(inputs);
        self.settle("fail");
    }

    pub(super) fn set_failure_without_input(&mut self) {
        self.counterexample = Some(vec![self.detail.clone().unwrap_or_else(|| "see detail".into())]);
        self.settle("fail");
    }

    pub(super) fn set_error(&mut self, msg: String) {
        self.detail = Some(msg);
        self.observed = "error".into();
        self.ok = false;
    }
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct Summary {
    pub total: usize,
    pub ok: usize,
    pub not_ok: usize,
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub config: SuiteConfig,
    pub summary: Summary,
    pub records: Vec<IdentityRecord>,
}

impl SuiteReport {
    pub(super) fn new(config: SuiteConfig, mut records: Vec<IdentityRecord>) -> Self {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let ok = records.iter().filter(|r| r.ok).count();
        SuiteReport {
            schema: REPORT_SCHEMA,
            config,
            summary: Summary {
                total: records.len(),
                ok,
                not_ok: records.len() - ok,
            },
            records,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.summary.not_ok == 0
    }

    pub fn record(&self, id: &str) -> Option<&IdentityRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            let tag = match (r.ok, r.expected.as_str()) {
                (true, "pass") => "PASS",
                (true, _) => "XFAIL",
                (false, "pass") => "FAIL",
                (false, _) => "XPASS",
            };
            let tag = if r.observed == "error" { "ERROR" } else { tag };
            let _ = writeln!(s, "{tag:<6} {:<44} {:>3} trials  {} ({})", r.id, r.trials, r.location, r.scope);
            if let Some(d) = &r.detail {
                let _ = writeln!(s, "       {d}");
            }
            if !r.ok || r.expected == "fail" {
                if let Some(cx) = &r.counterexample {
                    for (i, c) in cx.iter().enumerate() {
                        let _ = writeln!(s, "       input {i}: {c}");
                    }
                }
            }
            if let Some(ms) = r.elapsed_ms {
                let _ = writeln!(s, "       {ms} ms");
            }
        }
        let _ = writeln!(
            s,
            "{} identities, {} as expected, {} not",
            self.summary.total, self.summary.ok, self.summary.not_ok
        );
        s
    }
}
