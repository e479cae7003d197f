use std::fmt;

use crate::scalar::{is_zero_vec, Field};

/// Number of witnesses kept per report; the failure count is always exact.
pub const MAX_WITNESSES: usize = 16;

/// A basis tuple on which an identity fails, with its nonzero defect.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<F> {
    /// Which identity failed, e.g. `"leibniz"` or `"rep.cond3"`.
    pub check: &'static str,
    pub indices: Vec<usize>,
    pub defect: Vec<F>,
}

/// Outcome of checking an identity over all basis tuples.
///
/// `holds` is true iff `witnesses` is empty.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport<F> {
    pub holds: bool,
    pub failures: usize,
    pub witnesses: Vec<Witness<F>>,
}

impl<F: Field> Default for IdentityReport<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> IdentityReport<F> {
    pub fn new() -> Self {
        IdentityReport {
            holds: true,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    /// Records `defect` at `indices` if it is nonzero.
    pub fn record(&mut self, check: &'static str, indices: &[usize], defect: Vec<F>) {
        if is_zero_vec(&defect) {
            return;
        }
        self.holds = false;
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                check,
                indices: indices.to_vec(),
                defect,
            });
        }
    }

    pub fn merge(&mut self, other: IdentityReport<F>) {
        self.failures += other.failures;
        self.holds &= other.holds;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }

    /// First witness for the named check, if any.
    pub fn witness_for(&self, check: &str) -> Option<&Witness<F>> {
        self.witnesses.iter().find(|w| w.check == check)
    }
}

impl<F: fmt::Display> fmt::Display for Witness<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: defect [", self.check, self.indices)?;
        for (i, x) in self.defect.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}
