//! Output records and input parsing shared by every subcommand.
//!
//! Text output is the canonical text form of each object. Structured output
//! is JSON Lines: objects as `{"type", "n", "payload"}`, named values as
//! `{"name", "value"}`. Exact numbers are always decimal strings.

use catcodes_core::{BigRational, Error, Family, Object};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

pub fn object(obj: &Object, format: Format) -> String {
    match format {
        Format::Text => obj.to_string(),
        Format::Structured => json!({
            "type": obj.family().name(),
            "n": obj.size(),
            "payload": obj.to_string(),
        })
        .to_string(),
    }
}

/// A single named exact value: an integer or other scalar rendered as text.
pub fn named(name: &str, value: impl ToString, format: Format) -> String {
    match format {
        Format::Text => value.to_string(),
        Format::Structured => json!({ "name": name, "value": value.to_string() }).to_string(),
    }
}

/// A named rational, carrying numerator and denominator as strings.
pub fn rational(name: &str, q: &BigRational) -> String {
    json!({
        "name": name,
        "value": q.to_string(),
        "numerator": q.numer().to_string(),
        "denominator": q.denom().to_string(),
    })
    .to_string()
}

/// A row of exact integers, e.g. a table line.
pub fn row(kind: &str, index: usize, values: &[String]) -> String {
    json!({ "type": kind, "n": index, "payload": values }).to_string()
}

/// Parses one input line as a `family` object: canonical text, or a
/// structured record whose `type` must be `family`.
pub fn parse_object(family: Family, line: &str) -> Result<Object, Error> {
    let line = line.strip_suffix('\r').unwrap_or(line);
    if line.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(line)
            .map_err(|e| Error::Parse(format!("structured record: {e}")))?;
        let ty = v.get("type").and_then(Value::as_str).ok_or_else(|| {
            Error::Parse("structured record lacks a string \"type\" field".into())
        })?;
        if ty != family.name() {
            return Err(Error::Parse(format!(
                "structured record of type {ty:?} where {family} was expected"
            )));
        }
        let payload = v.get("payload").and_then(Value::as_str).ok_or_else(|| {
            Error::Parse("structured record lacks a string \"payload\" field".into())
        })?;
        let obj = Object::parse(family, payload)?;
        if let Some(n) = v.get("n") {
            if n.as_u64() != Some(obj.size() as u64) {
                return Err(Error::Parse(format!(
                    "structured record says n = {n} but payload has size {}",
                    obj.size()
                )));
            }
        }
        return Ok(obj);
    }
    Object::parse(family, line)
}
