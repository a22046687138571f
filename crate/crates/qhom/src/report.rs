//! Records emitted by the commands and their two renderings.

use std::fmt::Write;

use serde_json::{json, Value};

/// One verification result; `value` always carries `"check"` and `"passed"`.
#[derive(Clone, PartialEq, Debug)]
pub struct Record {
    pub value: Value,
    pub passed: bool,
}

impl Record {
    pub fn new(check: &str, passed: bool, mut fields: Value) -> Self {
        let map = fields.as_object_mut().expect("record fields form an object");
        map.insert(String::from("check"), json!(check));
        map.insert(String::from("passed"), json!(passed));
        Record { value: fields, passed }
    }
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.records.len() - self.passed()
    }

    pub fn summary(&self) -> Value {
        json!({"summary": {"passed": self.passed(), "failed": self.failed()}})
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            writeln!(out, "{}", r.value).unwrap();
        }
        writeln!(out, "{}", self.summary()).unwrap();
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let obj = r.value.as_object().expect("record is an object");
            let check = obj["check"].as_str().unwrap_or("?");
            let status = if r.passed { "ok  " } else { "FAIL" };
            let fields: Vec<String> =
                obj.iter().filter(|(k, _)| *k != "check" && *k != "passed").map(|(k, v)| format!("{k}={}", plain(v))).collect();
            writeln!(out, "{status} {check:<14} {}", fields.join(" ")).unwrap();
        }
        writeln!(out, "{} passed, {} failed", self.passed(), self.failed()).unwrap();
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
