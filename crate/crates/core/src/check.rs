//! Outcome of one verification: how many cases ran and which failed.

use serde::Serialize;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub cases: usize,
    /// One human-readable line per failing case, naming its parameters.
    pub failures: Vec<String>,
    /// Largest relative deviation seen; `None` for purely exact checks.
    pub max_deviation: Option<f64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// An exact comparison: `ok` must hold with no tolerance.
    pub fn exact(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// A numerical comparison of `got` against `want` at relative tolerance.
    pub fn close(&mut self, got: f64, want: f64, tol: f64, what: impl FnOnce() -> String) {
        self.cases += 1;
        let dev = if got == want {
            0.0
        } else {
            ((got - want) / want).abs()
        };
        let m = self.max_deviation.get_or_insert(0.0);
        *m = m.max(if dev.is_nan() { f64::INFINITY } else { dev });
        if !(dev <= tol) {
            self.failures.push(format!("{} (relative deviation {dev:.3e})", what()));
        }
    }

    /// Records an evaluation error as a failed case.
    pub fn error(&mut self, what: String) {
        self.cases += 1;
        self.failures.push(what);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.max_deviation = match (self.max_deviation, other.max_deviation) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
    }
}
