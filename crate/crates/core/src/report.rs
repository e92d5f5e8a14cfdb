//! Pass/fail reports for axiom suites. A failed check always carries the
//! lexicographically smallest failing basis tuple, so diagnostics are
//! reproducible run to run.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new() -> Self {
        AxiomReport { checks: Vec::new() }
    }

    pub fn pass(&mut self, name: &str) {
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            passed: true,
            counterexample: None,
        });
    }

    pub fn fail(&mut self, name: &str, counterexample: Vec<usize>) {
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            passed: false,
            counterexample: Some(counterexample),
        });
    }

    /// Records a check from an optional first counterexample.
    pub fn record(&mut self, name: &str, counterexample: Option<Vec<usize>>) {
        match counterexample {
            None => self.pass(name),
            Some(c) => self.fail(name, c),
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    /// Prefixes every check name, for nesting sub-reports.
    pub fn merge_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for mut check in other.checks {
            check.name = format!("{prefix}.{}", check.name);
            self.checks.push(check);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            if check.passed {
                writeln!(f, "{}: PASS", check.name)?;
            } else {
                let tuple = check
                    .counterexample
                    .as_ref()
                    .map(|c| c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
                    .unwrap_or_default();
                writeln!(f, "{}: FAIL at ({tuple})", check.name)?;
            }
        }
        Ok(())
    }
}
