use std::path::Path;
use std::process::ExitCode;

use expnet::Error;
use serde_json::Value;

pub const HOLDS: u8 = 0;
pub const FAILS: u8 = 1;
pub const INPUT: u8 = 2;
pub const CAP: u8 = 3;

/// Exit status, human-readable text and an optional JSON report.
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: Option<Value>,
    /// Errors go to stderr, reports to stdout.
    pub error: bool,
}

impl Outcome {
    pub fn new(holds: bool, text: String, json: Option<Value>) -> Self {
        Outcome { code: if holds { HOLDS } else { FAILS }, text, json, error: false }
    }

    pub fn input(msg: impl std::fmt::Display) -> Self {
        Outcome { code: INPUT, text: format!("error: {msg}"), json: None, error: true }
    }

    pub fn emit(self, report: Option<&Path>) -> ExitCode {
        if self.error {
            eprintln!("{}", self.text);
        } else if !self.text.is_empty() {
            print!("{}", self.text);
            if !self.text.ends_with('\n') {
                println!();
            }
        }
        if let (Some(path), Some(json)) = (report, &self.json) {
            let body = serde_json::to_string_pretty(json).expect("reports serialize");
            if let Err(e) = std::fs::write(path, body + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(INPUT);
            }
        }
        ExitCode::from(self.code)
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => CAP,
            Error::NotExpansive
            | Error::NotBijective
            | Error::NotCoverable
            | Error::AlphabetTooSmall(_)
            | Error::NoLinearSolution(_)
            | Error::BushBoundViolated { .. }
            | Error::NotSuperExpansive
            | Error::TooFewWords(_) => FAILS,
            _ => INPUT,
        };
        Outcome { code, text: format!("error: {e}"), json: None, error: true }
    }
}
