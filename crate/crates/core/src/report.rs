//! Check reports shared by every verifier.

use serde::Serialize;
use serde_json::Value;

/// Failures kept per report; the total count is always exact.
pub const MAX_WITNESSES: usize = 16;

/// One failed identity together with the data needed to replay it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub witness: Value,
}

/// Outcome of a family of exact checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Records one check; the witness is only built on failure.
    pub fn record(&mut self, ok: bool, identity: impl FnOnce() -> String, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.fail(identity(), witness());
        }
    }

    pub fn fail(&mut self, identity: String, witness: Value) {
        self.failed += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(Failure { identity, witness });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = MAX_WITNESSES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    /// A one-line summary such as `"412 checks, 0 failures"`.
    pub fn summary(&self) -> String {
        format!("{} checks, {} failures", self.checked, self.failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_are_capped_but_counted() {
        let mut r = CheckReport::new();
        for k in 0..40 {
            r.record(k % 2 == 0, || format!("id{k}"), || Value::from(k));
        }
        assert_eq!((r.checked, r.failed), (40, 20));
        assert_eq!(r.failures.len(), MAX_WITNESSES);
        assert!(!r.passed());
        let mut other = CheckReport::new();
        other.record(true, String::new, || Value::Null);
        other.merge(r);
        assert_eq!(other.checked, 41);
    }
}
