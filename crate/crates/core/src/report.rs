//! Verification reports: one entry per law, with a counterexample on failure.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactlin::LinMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// Where two sides of an identity differ: the basis multi-index of the
/// domain element and both evaluated sides (as coordinate vectors).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    pub checks: Vec<Check>,
    pub dims: BTreeMap<String, usize>,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Self {
        Report { status: Status::Pass, checks: Vec::new(), dims: BTreeMap::new() }
    }

    fn refresh(&mut self) {
        if self.status != Status::NotApplicable {
            self.status = if self.checks.iter().all(|c| c.ok) { Status::Pass } else { Status::Fail };
        }
    }

    /// Records whether `lhs == rhs` as maps, with the first differing column as witness.
    pub fn law(&mut self, name: impl Into<String>, lhs: &LinMap, rhs: &LinMap) -> bool {
        let witness = lhs.first_difference(rhs);
        let ok = witness.is_none();
        self.checks.push(Check { name: name.into(), ok, witness, note: None });
        self.refresh();
        ok
    }

    pub fn flag(&mut self, name: impl Into<String>, ok: bool) -> bool {
        self.checks.push(Check { name: name.into(), ok, witness: None, note: None });
        self.refresh();
        ok
    }

    pub fn flag_with_note(&mut self, name: impl Into<String>, ok: bool, note: impl Into<String>) -> bool {
        self.checks.push(Check { name: name.into(), ok, witness: None, note: Some(note.into()) });
        self.refresh();
        ok
    }

    pub fn dim(&mut self, name: impl Into<String>, value: usize) {
        self.dims.insert(name.into(), value);
    }

    /// Appends another report's checks, prefixing each name.
    pub fn absorb(&mut self, prefix: &str, other: &Report) {
        for c in &other.checks {
            let mut c = c.clone();
            c.name = if prefix.is_empty() { c.name } else { format!("{prefix}/{}", c.name) };
            self.checks.push(c);
        }
        for (k, v) in &other.dims {
            let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}/{k}") };
            self.dims.insert(key, *v);
        }
        self.refresh();
    }

    pub fn not_applicable(&mut self) {
        self.status = Status::NotApplicable;
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn ok(&self, name: &str) -> bool {
        self.check(name).is_some_and(|c| c.ok)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.ok)
    }

    pub(crate) fn into_invalid(self, what: &str) -> Result<Report, Error> {
        match self.first_failure() {
            None => Ok(self),
            Some(c) => Err(Error::Invalid { what: what.into(), law: c.name.clone(), report: Box::new(self) }),
        }
    }

    pub(crate) fn into_sentinel(self) -> Result<Report, Error> {
        match self.first_failure() {
            None => Ok(self),
            Some(c) => Err(Error::TheoremViolation { name: c.name.clone(), report: Box::new(self) }),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        };
        writeln!(f, "status: {status}")?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.ok { "ok" } else { "FAIL" }, c.name)?;
            if let Some(n) = &c.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
        }
        for (k, v) in &self.dims {
            writeln!(f, "  dim {k} = {v}")?;
        }
        Ok(())
    }
}
