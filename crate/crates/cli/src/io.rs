//! Input loading, output rendering and exit codes.

use fieldtower::tower::{Tower, TowerElement};
use fieldtower::Error;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use std::io::Write;
use std::process::ExitCode;

/// A successful result: the JSON document and whether it reports a failed
/// search (exit 1 with the data still printed).
pub struct Output {
    pub value: Value,
    pub failed: bool,
}

impl Output {
    pub fn ok(value: Value) -> Output {
        Output { value, failed: false }
    }

    pub fn failed(value: Value) -> Output {
        Output { value, failed: true }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed arguments or input documents.
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => CliError::Usage(format!("parse error: {m}")),
            e => CliError::Domain(e),
        }
    }
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn render(value: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    } else {
        serde_json::to_string(value).expect("JSON values serialize")
    }
}

fn emit(value: &Value, pretty: bool) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", render(value, pretty)).and_then(|_| out.flush());
}

pub fn finish(result: CliResult<Output>, pretty: bool) -> ExitCode {
    match result {
        Ok(out) => {
            emit(&out.value, pretty);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let (msg, code) = match e {
                CliError::Usage(m) => (m, 2),
                CliError::Domain(e) => (e.to_string(), 1),
            };
            emit(&json!({ "error": msg }), pretty);
            ExitCode::from(code)
        }
    }
}

/// An argument holding either inline JSON or the path of a JSON file.
pub fn load_text(arg: &str) -> CliResult<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') || t.starts_with('"') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::usage(format!("cannot read {arg}: {e}")))
}

pub fn load_json<T: DeserializeOwned>(arg: &str, what: &str) -> CliResult<T> {
    let text = load_text(arg)?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("invalid {what} JSON: {e}")))
}

pub fn load_tower(arg: &str) -> CliResult<Tower> {
    let d = load_json(arg, "tower")?;
    Ok(Tower::from_descriptor(&d)?)
}

/// A JSON list of element expressions, or an object keyed by generator
/// name giving one image per generator of `names_from`.
pub fn load_elements(arg: &str, parse_in: &Tower, names_from: Option<&Tower>) -> CliResult<Vec<TowerElement>> {
    let v: Value = load_json(arg, "element list")?;
    let texts: Vec<String> = match v {
        Value::Array(items) => items
            .into_iter()
            .map(|i| match i {
                Value::String(s) => Ok(s),
                other => Ok(other.to_string()),
            })
            .collect::<CliResult<_>>()?,
        Value::Object(map) => {
            let names = names_from
                .ok_or_else(|| CliError::usage("expected a JSON list of elements"))?;
            for k in map.keys() {
                if names.gen_index(k).is_none() {
                    return Err(CliError::usage(format!("unknown generator {k}")));
                }
            }
            names
                .generators()
                .iter()
                .map(|g| match map.get(g.name()) {
                    Some(Value::String(s)) => Ok(s.clone()),
                    Some(other) => Ok(other.to_string()),
                    None => Err(CliError::usage(format!("no image given for {}", g.name()))),
                })
                .collect::<CliResult<_>>()?
        }
        _ => return Err(CliError::usage("expected a JSON list or object of elements")),
    };
    texts
        .iter()
        .map(|s| parse_in.parse_element(s).map_err(CliError::from))
        .collect()
}

pub fn format_elements(t: &Tower, xs: &[TowerElement]) -> Vec<String> {
    xs.iter().map(|x| t.format_element(x)).collect()
}
