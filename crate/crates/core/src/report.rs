//! Pass/fail records produced by the check suites.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// First failing input, if any.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    /// Number of cases evaluated.
    pub cases: usize,
}

/// A derived object printed in exact form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub derived: Vec<Derived>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
            derived: Vec::new(),
        }
    }

    pub fn note(&mut self, name: &str, value: impl Into<String>) {
        self.derived.push(Derived {
            name: name.to_string(),
            value: value.into(),
        });
    }

    /// Runs `f` on every case; `f` returns a witness string on failure.
    /// Stops at the first failure.
    pub fn check<T>(
        &mut self,
        name: &str,
        cases: impl IntoIterator<Item = T>,
        mut f: impl FnMut(&T) -> Option<String>,
    ) -> bool {
        let mut count = 0;
        let mut witness = None;
        for case in cases {
            count += 1;
            if let Some(w) = f(&case) {
                witness = Some(w);
                break;
            }
        }
        self.push(name, witness, count)
    }

    /// Records a single-case check.
    pub fn record(&mut self, name: &str, witness: Option<String>) -> bool {
        self.push(name, witness, 1)
    }

    /// Records a check whose computation itself failed.
    pub fn record_error(&mut self, name: &str, err: impl std::fmt::Display) -> bool {
        self.push(name, Some(format!("error: {err}")), 0)
    }

    fn push(&mut self, name: &str, witness: Option<String>, cases: usize) -> bool {
        let passed = witness.is_none();
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            witness,
            cases,
        });
        passed
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
        for mut d in other.derived {
            d.name = format!("{}/{}", other.suite, d.name);
            self.derived.push(d);
        }
    }
}
