//! Structured command results and their JSON and text renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format '{s}' (expected json or text)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub status: Status,
    pub payload: Value,
}

impl CommandResult {
    pub fn new(command: &str, parameters: Map<String, Value>, payload: Value) -> CommandResult {
        CommandResult { command: command.into(), parameters, status: Status::Pass, payload }
    }

    pub fn failed(mut self) -> CommandResult {
        self.status = Status::Fail;
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "parameters": Value::Object(self.parameters.clone()),
            "status": self.status.name(),
            "payload": self.payload,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = format!("{}: {}\n", self.command, self.status.name());
                for (k, v) in &self.parameters {
                    let _ = writeln!(s, "  {k} = {}", inline(v));
                }
                render_text(&mut s, &self.payload, 0);
                s
            }
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => format!("{{{}}}", m.iter().map(|(k, v)| format!("{k}: {}", inline(v))).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object()),
        Value::Object(m) => m.values().all(|x| !x.is_object() && !x.is_array()),
        _ => true,
    }
}

fn render_text(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if is_flat(x) {
                    let _ = writeln!(out, "{pad}{k}: {}", inline(x));
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    render_text(out, x, indent + 1);
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_flat(x) {
                    let _ = writeln!(out, "{pad}- {}", inline(x));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render_text(out, x, indent + 1);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_key_sorted() {
        let mut p = Map::new();
        p.insert("N".into(), json!(3));
        let r = CommandResult::new("qdim", p, json!({"z": 1, "a": "-1"}));
        let s = r.render(Format::Json);
        assert!(s.find("\"a\"").unwrap() < s.find("\"z\"").unwrap());
        assert_eq!(s, r.render(Format::Json));
        let t = r.render(Format::Text);
        assert!(t.starts_with("qdim: pass\n"));
        assert!(t.contains("a: -1"));
    }
}
