//! Named pass/fail checks collected into reports by the verification
//! suites.

use std::fmt;

/// One named check with its outcome. `detail` is only populated on
/// failure.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// An ordered list of checks.
#[derive(Debug, Clone, Default)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Record one check. The detail closure is only evaluated on failure.
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: if passed { None } else { Some(detail()) },
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per check, `PASS`/`FAIL` first.
    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| match (&c.passed, &c.detail) {
                (true, _) => format!("PASS  {}", c.name),
                (false, Some(d)) => format!("FAIL  {} -- {}", c.name, d),
                (false, None) => format!("FAIL  {}", c.name),
            })
            .collect()
    }

    /// A compact summary: counts plus the failing lines.
    pub fn summary(&self) -> String {
        let failed: Vec<&Check> = self.failures().collect();
        if failed.is_empty() {
            format!("{} checks passed", self.len())
        } else {
            let mut s = format!("{} of {} checks failed:", failed.len(), self.len());
            for c in failed {
                s.push_str("\n  ");
                s.push_str(&c.name);
                if let Some(d) = &c.detail {
                    s.push_str(" -- ");
                    s.push_str(d);
                }
            }
            s
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
