//! Report schema shared by the check suites and the command-line driver.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::presented::CheckOutcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub suite: String,
    pub n: usize,
    pub format: Format,
    /// `None` means the rayon default; always 1 without the `parallel` feature.
    pub threads: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub checked: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

impl From<CheckOutcome> for Case {
    fn from(o: CheckOutcome) -> Self {
        Case { name: o.name, checked: o.checked, pass: o.pass, witness: o.witness }
    }
}

impl Case {
    pub fn new(name: impl Into<String>, checked: usize, witness: Option<String>) -> Self {
        Case { name: name.into(), checked, pass: witness.is_none(), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub config: RunConfig,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: RunConfig, cases: Vec<Case>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary {
            cases: cases.len(),
            passed,
            failed: cases.len() - passed,
            checked: cases.iter().map(|c| c.checked).sum(),
        };
        Report { suite: config.suite.clone(), config, cases, summary }
    }

    pub fn pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One line per case; failing cases are followed by their witness,
    /// which for rook cases includes the diagram.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.config;
        writeln!(s, "suite {} (n={}, seed={})", self.suite, c.n, c.seed).unwrap();
        for case in &self.cases {
            let tag = if case.pass { "PASS" } else { "FAIL" };
            writeln!(s, "  [{tag}] {} ({} checked)", case.name, case.checked).unwrap();
            if let (false, Some(w)) = (case.pass, &case.witness) {
                for line in w.lines() {
                    writeln!(s, "      {line}").unwrap();
                }
            }
        }
        let m = &self.summary;
        writeln!(s, "{} cases, {} passed, {} failed", m.cases, m.passed, m.failed).unwrap();
        s
    }

    pub fn emit(&self) -> String {
        match self.config.format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}
