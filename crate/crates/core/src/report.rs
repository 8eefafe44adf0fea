//! Check results shared by every verification routine.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
    ExternalDependency,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
            Status::ExternalDependency => "external-dependency",
        })
    }
}

/// Outcome of one verified claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub status: Status,
    /// The computed value, rendered exactly.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    /// Where the claim comes from (theorem name, table, displayed formula).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, status: Status) -> Self {
        Check { id: id.into(), statement: statement.into(), status, value: None, anchor: None, note: None }
    }

    pub fn from_bool(id: impl Into<String>, statement: impl Into<String>, ok: bool) -> Self {
        Check::new(id, statement, Status::from_bool(ok))
    }

    /// Passes iff `computed == expected`, recording the computed value.
    pub fn equal<T: PartialEq + fmt::Display>(
        id: impl Into<String>,
        statement: impl Into<String>,
        computed: &T,
        expected: &T,
    ) -> Self {
        Check::from_bool(id, statement, computed == expected).with_value(computed)
    }

    pub fn with_value(mut self, v: impl fmt::Display) -> Self {
        self.value = Some(v.to_string());
        self
    }

    pub fn with_anchor(mut self, a: impl Into<String>) -> Self {
        self.anchor = Some(a.into());
        self
    }

    pub fn with_note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.status, self.id, self.statement)?;
        if let Some(v) = &self.value {
            write!(f, " = {v}")?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// True when no check failed.
pub fn all_ok(checks: &[Check]) -> bool {
    !checks.iter().any(Check::failed)
}
