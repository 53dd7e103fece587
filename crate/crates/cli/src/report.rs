//! The JSON report envelope and exit-code mapping.

use std::collections::BTreeMap;
use std::time::Instant;

use grr_core::autgraph::AutError;
use grr_core::grouptab::GroupError;
use grr_core::grrcert::CertError;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("resource limit: {0}")]
    Limit(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Inconsistent(_) => 4,
        }
    }
}

impl From<AutError> for CliError {
    fn from(e: AutError) -> Self {
        match e {
            AutError::VertexLimit { .. }
            | AutError::NodeBudget(_)
            | AutError::TooManyVertices(_)
            | AutError::GuardExceeded { .. } => CliError::Limit(e.to_string()),
            AutError::Internal(_) => CliError::Inconsistent(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CertError> for CliError {
    fn from(e: CertError) -> Self {
        match e {
            CertError::Unsupported(_) => CliError::Limit(e.to_string()),
            CertError::SelfCheck(_) => CliError::Inconsistent(e.to_string()),
            CertError::Aut(a) => a.into(),
            CertError::Group(g) => g.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    /// Milliseconds per phase.
    pub timings: BTreeMap<String, u128>,
    pub version: String,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> Self {
        RunReport {
            command: command.to_string(),
            inputs,
            results: Value::Null,
            timings: BTreeMap::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Runs `f` and records its wall time under `phase`.
    pub fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings
            .insert(phase.to_string(), start.elapsed().as_millis());
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
