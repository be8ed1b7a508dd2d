use std::fmt;

use serde::{Deserialize, Serialize};

/// One counterexample: the inputs and the two sides that should have agreed.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FailureWitness {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of a property suite. `failures` empty means the suite passed;
/// `exact` records whether the comparisons were exact or tolerance-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub skipped: u64,
    pub exact: bool,
    pub failures: Vec<FailureWitness>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        CheckReport {
            suite: suite.into(),
            seed,
            trials: 0,
            skipped: 0,
            exact: true,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record_trial(&mut self) {
        self.trials += 1;
    }

    pub fn record_skip(&mut self) {
        self.skipped += 1;
    }

    pub fn record_failure(
        &mut self,
        inputs: impl fmt::Display,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) {
        self.failures.push(FailureWitness {
            inputs: inputs.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.trials += other.trials;
        self.skipped += other.skipped;
        self.exact &= other.exact;
        self.failures.extend(other.failures);
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} ({} trials, {} skipped, {} failures, {})",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.trials,
            self.skipped,
            self.failures.len(),
            if self.exact { "exact" } else { "approximate" },
        )
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary_line())?;
        for (i, w) in self.failures.iter().take(5).enumerate() {
            writeln!(f, "  witness {}: {}", i + 1, w.inputs)?;
            writeln!(f, "    lhs = {}", w.lhs)?;
            writeln!(f, "    rhs = {}", w.rhs)?;
        }
        if self.failures.len() > 5 {
            writeln!(f, "  ... {} more failures", self.failures.len() - 5)?;
        }
        Ok(())
    }
}

/// A negative control: the suite must reject a deliberately broken input,
/// otherwise the suite itself cannot detect violations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ControlOutcome {
    pub name: String,
    pub failed_as_expected: bool,
    pub witness: Option<FailureWitness>,
}

impl ControlOutcome {
    pub fn from_report(name: impl Into<String>, report: &CheckReport) -> Self {
        ControlOutcome {
            name: name.into(),
            failed_as_expected: !report.passed(),
            witness: report.failures.first().cloned(),
        }
    }
}

/// A suite together with its control.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub report: CheckReport,
    pub control: Option<ControlOutcome>,
}

impl SuiteOutcome {
    /// Overall verdict: the suite passed and the control (if any) failed.
    pub fn ok(&self) -> bool {
        self.report.passed()
            && self
                .control
                .as_ref()
                .map_or(true, |c| c.failed_as_expected)
    }
}
