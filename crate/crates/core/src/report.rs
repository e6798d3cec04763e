//! Check records and certificate reports.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Outcome of a single check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
    /// Computed and reported without an assertion.
    Info,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Skipped(_) => "skipped",
            Self::Info => "info",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }
}

/// Check-specific evidence, restricted to JSON-like scalars and arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Null,
    Bool(bool),
    Int(i64),
    Text(String),
    List(Vec<Witness>),
    Record(Vec<(String, Witness)>),
}

impl Witness {
    pub fn record<K: Into<String>>(fields: impl IntoIterator<Item = (K, Witness)>) -> Self {
        Self::Record(fields.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    pub fn ints(v: impl IntoIterator<Item = i64>) -> Self {
        Self::List(v.into_iter().map(Self::Int).collect())
    }

    pub fn matrix(rows: impl IntoIterator<Item = Vec<i64>>) -> Self {
        Self::List(rows.into_iter().map(Self::ints).collect())
    }

    pub fn text(s: impl ToString) -> Self {
        Self::Text(s.to_string())
    }

    pub fn field(&self, key: &str) -> Option<&Witness> {
        match self {
            Self::Record(fields) => fields.iter().find(|(k, _)| k == key).map(|(_, v)| v),
            _ => None,
        }
    }
}

impl From<bool> for Witness {
    fn from(b: bool) -> Self {
        Self::Bool(b)
    }
}

impl From<i64> for Witness {
    fn from(v: i64) -> Self {
        Self::Int(v)
    }
}

impl From<usize> for Witness {
    fn from(v: usize) -> Self {
        Self::Int(v as i64)
    }
}

impl From<u64> for Witness {
    fn from(v: u64) -> Self {
        Self::Int(v as i64)
    }
}

impl From<&str> for Witness {
    fn from(s: &str) -> Self {
        Self::Text(s.into())
    }
}

impl From<String> for Witness {
    fn from(s: String) -> Self {
        Self::Text(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub citation: String,
    pub witness: Witness,
    pub millis: u64,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, citation: impl Into<String>, status: Status, witness: Witness) -> Self {
        Self { name: name.into(), status, citation: citation.into(), witness, millis: 0 }
    }

    pub fn skipped(name: impl Into<String>, citation: impl Into<String>, reason: impl Into<String>) -> Self {
        let reason = reason.into();
        Self::new(name, citation, Status::Skipped(reason.clone()), Witness::record([("reason", Witness::Text(reason))]))
    }
}

/// Ordered check records of one run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificateReport {
    pub checks: Vec<CheckRecord>,
}

impl CertificateReport {
    pub fn push(&mut self, c: CheckRecord) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: CertificateReport) {
        self.checks.extend(other.checks);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// No asserted check failed.
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The report with every timing zeroed, for determinism comparisons.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        r.checks.iter_mut().for_each(|c| c.millis = 0);
        r
    }
}

/// Source of wall-clock milliseconds for check timings.
pub trait Clock: Sync {
    fn now_millis(&self) -> u64;
}

/// A clock that always reads zero (the `no_std` default).
#[derive(Clone, Copy, Debug, Default)]
pub struct NullClock;

impl Clock for NullClock {
    fn now_millis(&self) -> u64 {
        0
    }
}

/// Runs `f` and stamps the resulting record with its duration.
pub fn timed(clock: &dyn Clock, f: impl FnOnce() -> CheckRecord) -> CheckRecord {
    let start = clock.now_millis();
    let mut rec = f();
    rec.millis = clock.now_millis().saturating_sub(start);
    rec
}
