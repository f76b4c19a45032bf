//! The report document shared by the text and JSON outputs.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Summary lines and checks render the text form; `data` carries the full
/// structured result for machine use.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    pub input: String,
    pub status: Status,
    pub exit_code: i32,
    pub lines: Vec<Line>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    pub data: serde_json::Value,
}

impl Report {
    pub fn new(command: &str, input: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            input: input.into(),
            status: Status::Pass,
            exit_code: 0,
            lines: Vec::new(),
            checks: Vec::new(),
            warnings: Vec::new(),
            timing_ms: None,
            data: serde_json::Value::Null,
        }
    }

    pub fn line(&mut self, key: &str, value: impl ToString) {
        self.lines.push(Line {
            key: key.into(),
            value: value.to_string(),
        });
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn set_data<T: Serialize>(&mut self, data: &T) {
        self.data = serde_json::to_value(data).expect("report data serializes");
    }

    pub fn fail(&mut self, exit_code: i32) {
        self.status = Status::Fail;
        self.exit_code = exit_code;
    }

    pub fn error(command: &str, input: &str, message: &str, exit_code: i32) -> Self {
        let mut r = Report::new(command, input);
        r.status = Status::Error;
        r.exit_code = exit_code;
        r.line("error", message);
        r
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("hopfgal {} {}\n", self.command, self.input);
        for l in &self.lines {
            out.push_str(&format!("{}: {}\n", l.key, l.value));
        }
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            match &c.detail {
                Some(d) => out.push_str(&format!("[{mark}] {}: {d}\n", c.name)),
                None => out.push_str(&format!("[{mark}] {}\n", c.name)),
            }
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("time: {t} ms\n"));
        }
        out.push_str(&format!("status: {}\n", self.status.as_str()));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_reproduces_text() {
        let mut r = Report::new("integrals", "qc2.json");
        r.line("left integral", "1 + σ");
        r.check("antipode", false, Some("(x)".into()));
        r.warn("informational");
        r.fail(1);
        r.set_data(&vec![1, 2]);
        let back: Report = serde_json::from_str(&r.render_json()).unwrap();
        assert_eq!(back.render_text(), r.render_text());
        assert!(r
            .render_text()
            .contains("left integral: 1 + σ\n[FAIL] antipode: (x)\n"));
    }
}
