use std::fmt;
use std::time::Duration;

use crate::params::CrystalParams;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// No failures, but some enumeration hit its cap.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub params: CrystalParams,
    pub n_min: usize,
    pub n_max: usize,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub truncated: bool,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub(crate) fn new(suite: &str, params: CrystalParams, n_min: usize, n_max: usize) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            params,
            n_min,
            n_max,
            cases: 0,
            failures: Vec::new(),
            truncated: false,
            elapsed: Duration::ZERO,
        }
    }

    /// Records one checked case; a failure is recorded when `ok` is false.
    pub(crate) fn check(&mut self, ok: bool, input: impl fmt::Display, expected: impl fmt::Display, got: impl fmt::Display) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub(crate) fn merge(&mut self, other: VerificationReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.truncated |= other.truncated;
    }

    pub fn status(&self) -> Status {
        if !self.failures.is_empty() {
            Status::Fail
        } else if self.truncated {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} [{}] n={}..={}: {} ({} cases, {} failures) in {:.3}s",
            self.suite,
            self.params,
            self.n_min,
            self.n_max,
            self.status(),
            self.cases,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )?;
        for fail in self.failures.iter().take(20) {
            writeln!(f, "  {}: expected {}, got {}", fail.input, fail.expected, fail.got)?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  ... {} more", self.failures.len() - 20)?;
        }
        Ok(())
    }
}
