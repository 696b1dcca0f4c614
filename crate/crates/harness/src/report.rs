use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One failed verification with its witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub what: String,
    pub witness: Value,
}

/// Computed artifacts of one construction plus the oracle verdict.
///
/// `verified` is true exactly when `failures` is empty; [`finish`] keeps
/// the two in step.
///
/// [`finish`]: ConstructionReport::finish
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub check: String,
    /// The formula the check executes, in words.
    pub anchor: String,
    pub instance: String,
    pub artifacts: BTreeMap<String, Value>,
    pub verified: bool,
    pub failures: Vec<Failure>,
    /// Set when some verdict only holds inside a finite ball.
    pub bound_relative: bool,
    pub notes: Vec<String>,
}

impl ConstructionReport {
    pub fn new(check: &str, anchor: &str, instance: impl Into<String>) -> Self {
        ConstructionReport {
            check: check.to_string(),
            anchor: anchor.to_string(),
            instance: instance.into(),
            artifacts: BTreeMap::new(),
            verified: true,
            failures: Vec::new(),
            bound_relative: false,
            notes: Vec::new(),
        }
    }

    pub fn artifact(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("artifacts serialize");
        self.artifacts.insert(key.to_string(), v);
    }

    pub fn fail(&mut self, what: impl Into<String>, witness: impl Serialize) {
        self.failures.push(Failure {
            what: what.into(),
            witness: serde_json::to_value(witness).expect("witnesses serialize"),
        });
        self.verified = false;
    }

    /// Records a failure when `ok` is false.
    pub fn require(&mut self, ok: bool, what: impl Into<String>, witness: impl Serialize) {
        if !ok {
            self.fail(what, witness);
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Appends the failures of a sub-report under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: &ConstructionReport) {
        for f in &other.failures {
            self.failures.push(Failure {
                what: format!("{prefix}: {}", f.what),
                witness: f.witness.clone(),
            });
        }
        self.bound_relative |= other.bound_relative;
        self.verified = self.failures.is_empty();
    }

    pub fn finish(mut self) -> Self {
        self.verified = self.failures.is_empty();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
