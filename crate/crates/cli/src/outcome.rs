use serde_json::{json, Map, Value};

use sq_core::chains::ChainError;
use sq_core::coxeter::CoxeterError;
use sq_core::rep::RepError;

pub const SCHEMA_VERSION: u64 = 1;

pub const OK: i32 = 0;
pub const NEGATIVE: i32 = 1;
pub const INPUT_ERROR: i32 = 2;

/// Result of one command: exit code, text report, and the same data as
/// JSON.
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

/// Builds the text and JSON reports side by side so they cannot drift.
pub struct Report {
    command: &'static str,
    lines: Vec<String>,
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Report {
        Report {
            command,
            lines: Vec::new(),
            fields: Map::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn finish(self, code: i32) -> Outcome {
        let mut json = Map::new();
        json.insert("schema_version".into(), SCHEMA_VERSION.into());
        json.insert("command".into(), self.command.into());
        json.insert("exit_code".into(), code.into());
        json.insert("result".into(), Value::Object(self.fields));
        let mut text = self.lines.join("\n");
        text.push('\n');
        Outcome {
            code,
            text,
            json: Value::Object(json),
        }
    }
}

pub fn failure(command: &'static str, code: i32, message: String) -> Outcome {
    Outcome {
        code,
        text: format!("error: {message}\n"),
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "exit_code": code,
            "error": message,
        }),
    }
}

/// Exit code for a library error: mathematical negatives are 1, malformed
/// input is 2.
pub fn code_for(e: &ChainError) -> i32 {
    match e {
        ChainError::NotTilting(_) | ChainError::Incomplete { .. } | ChainError::NotReduced => NEGATIVE,
        ChainError::Coxeter(CoxeterError::NotReduced) => NEGATIVE,
        ChainError::Rep(RepError::Coxeter(CoxeterError::NotReduced)) => NEGATIVE,
        _ => INPUT_ERROR,
    }
}
