//! Command reports: a JSON document with a fixed key order and a short text summary.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use superlr::{CheckReport, Element, MultilinearMap};

const SHOWN_VIOLATIONS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationOut {
    pub label: String,
    /// 1-based basis indices.
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub subject: String,
    pub passed: bool,
    pub violation_count: usize,
    pub violations: Vec<ViolationOut>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessOut {
    pub name: String,
    /// Entries `(i,...,k) = c` of a map, or the coordinates of an element, 1-based.
    pub value: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub passed: bool,
    pub checks: Vec<CheckOut>,
    pub results: BTreeMap<String, serde_json::Value>,
    pub witnesses: Vec<WitnessOut>,
}

impl Report {
    pub fn new(command: &[String]) -> Self {
        Report { command: command.to_vec(), passed: true, checks: vec![], results: BTreeMap::new(), witnesses: vec![] }
    }

    pub fn check(&mut self, subject: impl Into<String>, r: &CheckReport) {
        self.passed &= r.passed;
        self.checks.push(CheckOut {
            name: r.name.clone(),
            subject: subject.into(),
            passed: r.passed,
            violation_count: r.violations.len(),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationOut {
                    label: v.label.clone(),
                    indices: v.indices.iter().map(|i| i + 1).collect(),
                    lhs: v.lhs.display(),
                    rhs: v.rhs.display(),
                })
                .collect(),
            notes: r.notes.clone(),
        });
    }

    /// A failed check with no basis witness, for refusals.
    pub fn fail(&mut self, name: &str, subject: impl Into<String>, note: impl Into<String>) {
        let mut r = CheckReport::new(name);
        r.passed = false;
        r.note(note);
        self.check(subject, &r);
    }

    pub fn result(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn witness_map(&mut self, name: &str, map: &MultilinearMap) {
        let value = map
            .entries()
            .map(|(ins, out, c)| {
                let idx: Vec<String> = ins.iter().chain(std::iter::once(&out)).map(|i| (i + 1).to_string()).collect();
                format!("({}) = {}", idx.join(","), superlr::scalar::format_scalar(c))
            })
            .collect();
        self.witnesses.push(WitnessOut { name: name.to_string(), value });
    }

    pub fn witness_element(&mut self, name: &str, e: &Element) {
        self.witnesses.push(WitnessOut { name: name.to_string(), value: vec![e.display()] });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{} {} [{}]", if c.passed { "PASS" } else { "FAIL" }, c.name, c.subject);
            for v in c.violations.iter().take(SHOWN_VIOLATIONS) {
                let idx: Vec<String> = v.indices.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(out, "  {} at ({}): {} != {}", v.label, idx.join(","), v.lhs, v.rhs);
            }
            if c.violation_count > SHOWN_VIOLATIONS {
                let _ = writeln!(out, "  ... {} more", c.violation_count - SHOWN_VIOLATIONS);
            }
            for n in &c.notes {
                let _ = writeln!(out, "  note: {n}");
            }
        }
        for (k, v) in &self.results {
            let _ = writeln!(out, "{k}: {v}");
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "witness {}:", w.name);
            for line in &w.value {
                let _ = writeln!(out, "  {line}");
            }
        }
        let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}
