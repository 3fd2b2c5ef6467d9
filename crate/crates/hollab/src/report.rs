//! Suite reports: named checks with claim anchors, pass/fail status, and a
//! minimal witness on failure. JSON schema:
//! {suite, version, seed, checks: [{id, anchor, status, witness?}], elapsed_ms}.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verified claim: a stable id, a human-readable statement of the claim
/// being checked, and the outcome.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(id: &str, anchor: &str) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    pub fn fail(id: &str, anchor: &str, witness: String) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            status: CheckStatus::Fail,
            witness: Some(witness),
        }
    }

    /// Builds a check from a boolean outcome, attaching the witness only on
    /// failure.
    pub fn from_outcome(id: &str, anchor: &str, ok: bool, witness: impl Fn() -> String) -> Self {
        if ok {
            Check::pass(id, anchor)
        } else {
            Check::fail(id, anchor, witness())
        }
    }

    /// Builds a check from a Result, treating errors as failures with the
    /// error text as witness.
    pub fn from_result(
        id: &str,
        anchor: &str,
        res: crate::error::Result<bool>,
        witness: impl Fn() -> String,
    ) -> Self {
        match res {
            Ok(ok) => Check::from_outcome(id, anchor, ok, witness),
            Err(e) => Check::fail(id, anchor, e.to_string()),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub version: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, mut checks: Vec<Check>, elapsed_ms: u64) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        SuiteReport {
            suite: suite.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            seed,
            checks,
            elapsed_ms,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }

    /// Full JSON, schema per the module docs.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The byte-stable form: identical across runs with the same seed and
    /// version. Wall-clock is the one nondeterministic field, so it is
    /// omitted here.
    pub fn canonical_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string_pretty(&value).expect("report serializes")
    }

    /// One line per check plus a summary, for terminals.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
            };
            out.push_str(&format!("{mark} {} — {}\n", c.id, c.anchor));
            if let Some(w) = &c.witness {
                out.push_str(&format!("     witness: {w}\n"));
            }
        }
        let failed = self.failed().len();
        out.push_str(&format!(
            "{}: {}/{} checks passed ({} ms)\n",
            self.suite,
            self.checks.len() - failed,
            self.checks.len(),
            self.elapsed_ms
        ));
        out
    }
}
