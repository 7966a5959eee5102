//! Structured pass/fail reports for the verification operations.
//!
//! A report is an ordered list of named checks plus free-form notes
//! (used to flag resolved source typos rather than hiding them). The
//! CLI prints reports verbatim; tests assert on `all_passed`.

use std::fmt;

/// One named check with its outcome.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub passed: bool,
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new(), notes: Vec::new() }
    }

    /// Record one check outcome.
    pub fn check(&mut self, label: impl Into<String>, passed: bool) {
        self.checks.push(Check { label: label.into(), passed });
    }

    /// Record an informational note (printed, never counted as failure).
    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Fold another report into this one, keeping its title as a prefix.
    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            self.checks.push(Check { label: format!("{}: {}", other.title, c.label), passed: c.passed });
        }
        for n in other.notes {
            self.notes.push(format!("{}: {}", other.title, n));
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    /// Labels of failing checks, for compact assertion messages.
    pub fn failing_labels(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.label.as_str())
            .collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{tag}] {}", c.label)?;
        }
        for n in &self.notes {
            writeln!(f, "[NOTE] {n}")?;
        }
        write!(
            f,
            "summary: {} checks, {} failures",
            self.checks.len(),
            self.failures()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_counts_and_formats() {
        let mut r = Report::new("demo");
        r.check("first", true);
        r.check("second", false);
        r.note("informational");
        assert!(!r.all_passed());
        assert_eq!(r.failures(), 1);
        assert_eq!(r.failing_labels(), vec!["second"]);
        let text = format!("{r}");
        assert!(text.contains("[PASS] first"));
        assert!(text.contains("[FAIL] second"));
        assert!(text.contains("[NOTE] informational"));
        assert!(text.contains("summary: 2 checks, 1 failures"));

        let mut outer = Report::new("outer");
        outer.absorb(r);
        assert_eq!(outer.failing_labels(), vec!["demo: second"]);
    }
}
