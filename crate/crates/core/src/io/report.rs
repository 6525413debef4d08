//! Line-delimited JSON reports.
//!
//! The first line is a header carrying the schema version, the command and
//! the subject; every further line is one entry. Values are strings, so exact
//! rationals are printed as `p/q` and never approximated. The human-readable
//! rendering is produced from the same entries.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "lck-lab.report.v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Header {
    schema: String,
    command: String,
    subject: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(command: impl Into<String>, subject: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            subject: subject.into(),
            entries: Vec::new(),
        }
    }

    /// Adds an informational entry.
    pub fn info(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push(Entry {
            key: key.into(),
            value: value.to_string(),
            status: None,
        });
    }

    /// Adds a pass/fail entry.
    pub fn check(&mut self, key: impl Into<String>, pass: bool, value: impl ToString) {
        self.entries.push(Entry {
            key: key.into(),
            value: value.to_string(),
            status: Some(Status::from_bool(pass)),
        });
    }

    /// True when no entry failed.
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.status != Some(Status::Fail))
    }

    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn to_jsonl(&self) -> String {
        let header = Header {
            schema: SCHEMA.to_string(),
            command: self.command.clone(),
            subject: self.subject.clone(),
        };
        let mut out = serde_json::to_string(&header).expect("serialisable");
        out.push('\n');
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("serialisable"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Self, String> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let first = lines.next().ok_or("empty report")?;
        let header: Header = serde_json::from_str(first).map_err(|e| format!("line 1: {e}"))?;
        if header.schema != SCHEMA {
            return Err(format!("unsupported schema `{}`", header.schema));
        }
        let entries = lines
            .enumerate()
            .map(|(k, l)| serde_json::from_str(l).map_err(|e| format!("line {}: {e}", k + 2)))
            .collect::<Result<Vec<Entry>, String>>()?;
        Ok(Report {
            command: header.command,
            subject: header.subject,
            entries,
        })
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, self.subject);
        let width = self.entries.iter().map(|e| e.key.len()).max().unwrap_or(0);
        for e in &self.entries {
            let mark = match e.status {
                Some(Status::Pass) => "PASS ",
                Some(Status::Fail) => "FAIL ",
                None => "     ",
            };
            let _ = writeln!(out, "  {mark}{:width$}  {}", e.key, e.value);
        }
        out
    }
}
