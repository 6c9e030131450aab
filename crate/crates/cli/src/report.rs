use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "OK")]
    Ok,
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

/// Everything a command prints. Field order is the JSON key order.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub residuals: Vec<Value>,
    pub closed_form: Option<String>,
    pub citations: Vec<String>,
    pub status: Status,
    /// Human-readable body for text output.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: Map::new(),
            results: Value::Null,
            residuals: Vec::new(),
            closed_form: None,
            citations: Vec::new(),
            status: Status::Ok,
            text: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.to_string(), v.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes"),
            Format::Text => {
                let mut out = self.text.clone();
                if let Some(c) = &self.closed_form {
                    if !out.iter().any(|l| l == c) {
                        out.push(c.clone());
                    }
                }
                for c in &self.citations {
                    out.push(format!("ref: {c}"));
                }
                out.push(format!("status: {}", self.status.as_str()));
                out.join("\n")
            }
        }
    }
}

pub struct Output {
    pub report: Report,
}

impl Output {
    pub fn exit_code(&self) -> u8 {
        match self.report.status {
            Status::Fail => 2,
            _ => 0,
        }
    }
}

/// Errors that end a command without a report.
#[derive(Debug)]
pub enum Outcome {
    /// Exit 1.
    Usage(String),
    /// Exit 2.
    Failed(String),
}
