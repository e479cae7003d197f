use std::fmt::Write as _;
use std::time::Duration;

use leibniz_kit::io::SCHEMA;
use leibniz_kit::Error;
use serde::Serialize;
use serde_json::{Map, Value};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;

/// How a command ended.
#[derive(Debug)]
pub enum Outcome {
    Pass,
    Fail,
    Error { code: u8, message: String },
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Pass => EXIT_PASS,
            Outcome::Fail => EXIT_FAIL,
            Outcome::Error { code, .. } => *code,
        }
    }

    pub fn from_error(err: &Error) -> Self {
        let code = match err {
            Error::ResourceCap { .. } => EXIT_CAP,
            Error::Input(_) | Error::DimensionMismatch { .. } => EXIT_INPUT,
            Error::NotLeibniz(_)
            | Error::InvalidRepresentation(_)
            | Error::InvalidNaiveRepresentation(_)
            | Error::InvalidGraphMap(_)
            | Error::Internal(_) => EXIT_FAIL,
        };
        Outcome::Error {
            code,
            message: err.to_string(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct InputDigest {
    pub name: String,
    pub bytes: usize,
    pub sha256: String,
}

#[derive(Serialize, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
}

/// Everything a command did: inputs, checks, results and the human-readable text.
#[derive(Debug)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub checks: Vec<CheckResult>,
    pub results: Map<String, Value>,
    text: String,
    status: &'static str,
    exit_code: u8,
    elapsed_ms: u128,
    error: Option<String>,
}

impl RunReport {
    pub fn new(argv: &[String]) -> Self {
        RunReport {
            command: argv.iter().skip(1).cloned().collect(),
            inputs: Vec::new(),
            checks: Vec::new(),
            results: Map::new(),
            text: String::new(),
            status: "pass",
            exit_code: EXIT_PASS,
            elapsed_ms: 0,
            error: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> bool {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
        });
        passed
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn line(&mut self, line: impl AsRef<str>) {
        let _ = writeln!(self.text, "{}", line.as_ref());
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn finish(&mut self, outcome: &Outcome, elapsed: Duration) {
        self.elapsed_ms = elapsed.as_millis();
        self.exit_code = outcome.exit_code();
        self.status = match outcome {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Error { code, message } => {
                self.error = Some(message.clone());
                match *code {
                    EXIT_CAP => "resource_cap",
                    EXIT_INPUT => "input_error",
                    _ => "fail",
                }
            }
        };
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "checks": self.checks,
            "results": self.results,
            "status": self.status,
            "exit_code": self.exit_code,
            "error": self.error,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}
