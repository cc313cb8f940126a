//! Pass/fail reports with residual witnesses.

use std::fmt;

use crate::field::Scalar;

/// One failing instance of an identity: the identity tag, the basis indices
/// it was evaluated on, and the nonzero residual (coordinates of LHS − RHS).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub id: String,
    pub indices: Vec<usize>,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

impl Default for IdentityReport {
    fn default() -> Self {
        IdentityReport::pass()
    }
}

impl IdentityReport {
    pub fn pass() -> Self {
        IdentityReport { passed: true, witnesses: Vec::new() }
    }

    /// Merge another report, keeping witness order (self first).
    pub fn merge(mut self, other: IdentityReport) -> Self {
        self.passed &= other.passed;
        self.witnesses.extend(other.witnesses);
        self
    }

    /// Tags of the identities that failed, deduplicated in first-seen order.
    pub fn failed_ids(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for w in &self.witnesses {
            if !out.contains(&w.id.as_str()) {
                out.push(&w.id);
            }
        }
        out
    }

    /// Prefix every witness tag, used when a check is reused inside a larger one.
    pub fn tagged(mut self, prefix: &str) -> Self {
        for w in &mut self.witnesses {
            w.id = format!("{prefix}{}", w.id);
        }
        self
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "pass");
        }
        write!(f, "fail ({} witnesses; identities {:?})", self.witnesses.len(), self.failed_ids())
    }
}

/// Whether a checker collects every witness or stops at the first failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Full,
    FirstFailure,
}

/// Accumulates witnesses while a checker walks basis tuples.
#[derive(Debug)]
pub struct Collector {
    mode: Mode,
    report: IdentityReport,
}

impl Collector {
    pub fn new(mode: Mode) -> Self {
        Collector { mode, report: IdentityReport::pass() }
    }

    /// True once a first-failure collector has seen a failure.
    pub fn done(&self) -> bool {
        self.mode == Mode::FirstFailure && !self.report.passed
    }

    pub fn record(&mut self, id: &str, indices: &[usize], residual: Vec<Scalar>) {
        if residual.iter().all(Scalar::is_zero) {
            return;
        }
        self.report.passed = false;
        if self.mode == Mode::Full || self.report.witnesses.is_empty() {
            self.report.witnesses.push(Witness { id: id.to_string(), indices: indices.to_vec(), residual });
        }
    }

    pub fn absorb(&mut self, other: IdentityReport) {
        if self.done() {
            return;
        }
        self.report = std::mem::take(&mut self.report).merge(other);
        if self.mode == Mode::FirstFailure {
            self.report.witnesses.truncate(1);
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn finish(self) -> IdentityReport {
        self.report
    }
}
