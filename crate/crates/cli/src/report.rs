use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};

use serde_json::{Map, Value};

use crate::{Format, Global};

/// Errors that stop a command before it produces a record.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
}

impl From<k0ring::Error> for Failure {
    fn from(e: k0ring::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// A finished command: the machine record, its human rendering, and whether
/// every mathematical check in it passed.
pub struct Report {
    pub ok: bool,
    pub json: Value,
    pub text: String,
}

impl Report {
    /// Starts a record whose first keys are the command name and the seed.
    pub fn new(command: &str, global: &Global) -> Self {
        let mut m = Map::new();
        m.insert("command".into(), command.into());
        m.insert("seed".into(), global.seed.into());
        Report {
            ok: true,
            json: Value::Object(m),
            text: String::new(),
        }
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        if let Value::Object(m) = &mut self.json {
            m.insert(key.into(), v.into());
        }
        self
    }

    pub fn line(&mut self, s: impl AsRef<str>) -> &mut Self {
        let _ = writeln!(self.text, "{}", s.as_ref());
        self
    }

    pub fn emit(&self, global: &Global) -> io::Result<()> {
        let body = match global.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(io::Error::other)?;
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        };
        match &global.out {
            Some(path) => fs::write(path, body),
            None => io::stdout().lock().write_all(body.as_bytes()),
        }
    }
}

pub fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("records serialize to JSON")
}
