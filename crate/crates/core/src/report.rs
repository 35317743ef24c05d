use crate::graded::Element;

/// One failed instance of an identity: the label, the basis tuple it failed on, and both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub label: String,
    pub indices: Vec<usize>,
    pub lhs: Element,
    pub rhs: Element,
}

/// Outcome of a checker. `passed` holds iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), passed: true, violations: Vec::new(), notes: Vec::new() }
    }

    pub fn violation(&mut self, label: &str, indices: &[usize], lhs: Element, rhs: Element) {
        self.passed = false;
        self.violations.push(Violation { label: label.to_string(), indices: indices.to_vec(), lhs, rhs });
    }

    /// Records a violation when `lhs != rhs`.
    pub fn expect_eq(&mut self, label: &str, indices: &[usize], lhs: Element, rhs: Element) {
        if lhs != rhs {
            self.violation(label, indices, lhs, rhs);
        }
    }

    /// Records a violation when `value` is nonzero.
    pub fn expect_zero(&mut self, label: &str, indices: &[usize], value: Element) {
        if !value.is_zero() {
            self.violation(label, indices, value, Element::zero());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Folds a sub-report in, prefixing its labels with the sub-report's name.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut v in other.violations {
            v.label = format!("{}/{}", other.name, v.label);
            self.passed = false;
            self.violations.push(v);
        }
        self.notes.extend(other.notes);
    }

    pub fn count(&self, label: &str) -> usize {
        self.violations.iter().filter(|v| v.label == label || v.label.ends_with(&format!("/{label}"))).count()
    }

    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = self.violations.iter().map(|v| v.label.clone()).collect();
        out.dedup();
        out.sort();
        out.dedup();
        out
    }
}
