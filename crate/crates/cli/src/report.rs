use std::time::Instant;

use preper_core::report::Check;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1.0";

/// Machine-readable result of one command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: Vec<String>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: Vec<String>, checks: Vec<Check>, data: Option<serde_json::Value>, started: Instant) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            checks,
            data,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(Check::failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
