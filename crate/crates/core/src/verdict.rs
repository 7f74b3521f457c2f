//! Structured results of theorem checks.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Vacuous,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Vacuous => "vacuous",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub clause: String,
    pub inputs: BTreeMap<String, String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    #[serde(rename = "check")]
    pub check_name: String,
    /// Field size; 0 for identities over the integers.
    pub q: u64,
    pub status: Status,
    #[serde(rename = "instances")]
    pub instances_checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl Verdict {
    pub fn skipped(check_name: &str, q: u64, reason: &str) -> Self {
        Verdict {
            check_name: check_name.to_string(),
            q,
            status: Status::Skipped,
            instances_checked: 0,
            counterexample: None,
            note: reason.to_string(),
            millis: None,
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Accumulates clause results for one check and keeps the first failure.
#[derive(Debug)]
pub struct Checker {
    name: String,
    q: u64,
    instances: u64,
    counterexample: Option<Counterexample>,
    notes: Vec<String>,
}

impl Checker {
    pub fn new(name: &str, q: u64) -> Self {
        Checker {
            name: name.to_string(),
            q,
            instances: 0,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn instances(&self) -> u64 {
        self.instances
    }

    /// Records one instance of `clause`; returns `ok`.
    pub fn expect(
        &mut self,
        clause: &str,
        ok: bool,
        inputs: &[(&str, &dyn Display)],
        expected: &dyn Display,
        actual: &dyn Display,
    ) -> bool {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                clause: clause.to_string(),
                inputs: inputs
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
        ok
    }

    pub fn expect_eq<T: PartialEq + Display>(
        &mut self,
        clause: &str,
        inputs: &[(&str, &dyn Display)],
        expected: T,
        actual: T,
    ) -> bool {
        let ok = expected == actual;
        self.expect(clause, ok, inputs, &expected, &actual)
    }

    /// Boolean claim with "true"/"false" as the recorded values.
    pub fn expect_true(&mut self, clause: &str, ok: bool, inputs: &[(&str, &dyn Display)]) -> bool {
        self.expect(clause, ok, inputs, &true, &ok)
    }

    pub fn note(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.notes.contains(&text) {
            self.notes.push(text);
        }
    }

    /// Flags a clause whose hypothesis never applied at this field.
    pub fn vacuous(&mut self, clause: &str) {
        self.note(format!("vacuous: {clause}"));
    }

    pub fn finish(self) -> Verdict {
        let status = if self.counterexample.is_some() {
            Status::Fail
        } else if self.instances == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        Verdict {
            check_name: self.name,
            q: self.q,
            status,
            instances_checked: self.instances,
            counterexample: self.counterexample,
            note: self.notes.join("; "),
            millis: None,
        }
    }
}

/// Display adapter for lists of displayable items.
pub struct ListFmt<'a, T>(pub &'a [T]);

impl<T: Display> Display for ListFmt<'_, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_counterexample_is_kept() {
        let mut c = Checker::new("demo", 7);
        c.expect_eq("a", &[("x", &1)], 1, 1);
        c.expect_eq("b", &[("x", &2)], 3, 4);
        c.expect_eq("c", &[("x", &3)], 5, 6);
        let v = c.finish();
        assert_eq!(v.status, Status::Fail);
        assert_eq!(v.instances_checked, 3);
        let cx = v.counterexample.unwrap();
        assert_eq!(cx.clause, "b");
        assert_eq!(cx.inputs["x"], "2");
        assert_eq!((cx.expected.as_str(), cx.actual.as_str()), ("3", "4"));
    }

    #[test]
    fn empty_checker_is_vacuous() {
        let mut c = Checker::new("demo", 3);
        c.vacuous("permutes the empty set");
        let v = c.finish();
        assert_eq!(v.status, Status::Vacuous);
        assert_eq!(v.note, "vacuous: permutes the empty set");
    }

    #[test]
    fn json_shape() {
        let v = Verdict::skipped("x", 4, "requires odd q");
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(
            s,
            r#"{"check":"x","q":4,"status":"skipped","instances":0,"note":"requires odd q"}"#
        );
        let back: Verdict = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn list_format() {
        assert_eq!(ListFmt(&[1, 2, 3]).to_string(), "{1,2,3}");
        assert_eq!(ListFmt::<u8>(&[]).to_string(), "{}");
    }
}
