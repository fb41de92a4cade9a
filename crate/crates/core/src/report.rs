//! Outcome records shared by the functor audits and the suites.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not run because it would exceed the work bound.
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub label: String,
    pub status: Status,
    /// Number of cases examined.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    /// Passes iff `failures` is empty; otherwise keeps the first failure.
    pub fn from_failures(label: impl Into<String>, checked: u64, failures: Vec<Value>) -> Self {
        let status = if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        let note = (failures.len() > 1).then(|| format!("{} failing cases", failures.len()));
        Self {
            label: label.into(),
            status,
            checked,
            counterexample: failures.into_iter().next(),
            note,
        }
    }

    pub fn pass(label: impl Into<String>, checked: u64) -> Self {
        Self::from_failures(label, checked, Vec::new())
    }

    pub fn fail(label: impl Into<String>, checked: u64, counterexample: Value) -> Self {
        Self::from_failures(label, checked, vec![counterexample])
    }

    pub fn skipped(label: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            status: Status::Skipped,
            checked: 0,
            counterexample: None,
            note: Some(reason.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(old) => format!("{old}; {note}"),
            None => note,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
