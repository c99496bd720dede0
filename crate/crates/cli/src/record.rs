//! One-line structured records: `key=value` pairs separated by spaces, or a
//! JSON object per line. Both forms parse back to the same [`Record`].

use std::fmt;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value as Json};
use trimlat::SubsetMask;

use crate::parse::parse_set;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(BigInt),
    Float(f64),
    Bool(bool),
    /// Sorted 1-based elements.
    Set(Vec<usize>),
    /// A bare word: no whitespace, `=`, braces, and not readable as another
    /// variant.
    Word(String),
}

impl Value {
    pub fn mask(mask: SubsetMask) -> Self {
        Value::Set(mask.elements().map(|e| e + 1).collect())
    }

    fn parse_text(text: &str) -> Option<Self> {
        if text.is_empty() {
            return None;
        }
        Some(match text {
            "true" => Value::Bool(true),
            "false" => Value::Bool(false),
            _ if text.starts_with('{') => Value::Set(parse_set(text)?),
            _ => {
                if let Ok(i) = text.parse::<BigInt>() {
                    Value::Int(i)
                } else if let Ok(f) = text.parse::<f64>() {
                    Value::Float(f)
                } else {
                    Value::Word(text.to_string())
                }
            }
        })
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Int(i) => Json::Number(i.to_string().parse::<Number>().expect("integer literal")),
            Value::Float(f) => Number::from_f64(*f).map_or(Json::Null, Json::Number),
            Value::Bool(b) => Json::Bool(*b),
            Value::Set(s) => Json::Array(s.iter().map(|&e| Json::from(e)).collect()),
            Value::Word(w) => Json::String(w.clone()),
        }
    }

    fn from_json(json: &Json) -> Option<Self> {
        Some(match json {
            Json::Bool(b) => Value::Bool(*b),
            Json::String(s) => Value::Word(s.clone()),
            Json::Array(items) => Value::Set(items.iter().map(|i| i.as_u64().map(|u| u as usize)).collect::<Option<_>>()?),
            Json::Number(n) => {
                let text = n.to_string();
                if text.contains(['.', 'e', 'E']) {
                    Value::Float(text.parse().ok()?)
                } else {
                    Value::Int(text.parse().ok()?)
                }
            }
            Json::Null | Json::Object(_) => return None,
        })
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            // `{:?}` keeps a decimal point, so the value reads back as a float
            Value::Float(x) => write!(f, "{x:?}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Set(s) => {
                let parts: Vec<String> = s.iter().map(|e| e.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
            Value::Word(w) => f.write_str(w),
        }
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v.into())
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Self {
        Value::Int(v)
    }
}

impl From<num_bigint::BigUint> for Value {
    fn from(v: num_bigint::BigUint) -> Self {
        Value::Int(v.into())
    }
}

impl From<SubsetMask> for Value {
    fn from(v: SubsetMask) -> Self {
        Value::mask(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Word(v.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record {
    pub fields: Vec<(String, Value)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed record: {0}")]
pub struct RecordError(String);

impl Record {
    /// A record whose first field is `record=<name>`.
    pub fn new(name: &str) -> Self {
        Record { fields: vec![("record".into(), Value::from(name))] }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.into(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_line(&self) -> String {
        let parts: Vec<String> = self.fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(" ")
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Json> = self.fields.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        Json::Object(map).to_string()
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_line()
        }
    }

    pub fn parse_line(line: &str) -> Result<Self, RecordError> {
        let fields = line
            .split_whitespace()
            .map(|pair| {
                let (k, v) = pair.split_once('=').ok_or_else(|| RecordError(format!("`{pair}` has no `=`")))?;
                let value = Value::parse_text(v).ok_or_else(|| RecordError(format!("bad value in `{pair}`")))?;
                Ok((k.to_string(), value))
            })
            .collect::<Result<_, _>>()?;
        Ok(Record { fields })
    }

    pub fn parse_json(line: &str) -> Result<Self, RecordError> {
        let json: Json = serde_json::from_str(line).map_err(|e| RecordError(e.to_string()))?;
        let Json::Object(map) = json else {
            return Err(RecordError("expected a JSON object".into()));
        };
        let fields = map
            .into_iter()
            .map(|(k, v)| {
                let value = Value::from_json(&v).ok_or_else(|| RecordError(format!("unsupported value for `{k}`")))?;
                Ok((k, value))
            })
            .collect::<Result<_, _>>()?;
        Ok(Record { fields })
    }

    /// Parses either form.
    pub fn parse(line: &str) -> Result<Self, RecordError> {
        if line.trim_start().starts_with('{') {
            Self::parse_json(line)
        } else {
            Self::parse_line(line)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Record {
        Record::new("count")
            .with("kind", "cover")
            .with("k", 2usize)
            .with("mask", SubsetMask::from_elements([0, 2]))
            .with("empty", SubsetMask::EMPTY)
            .with("value", BigInt::parse_bytes(b"-123456789012345678901234567890", 10).unwrap())
            .with("bound", 1.9344f64)
            .with("whole", 2.0f64)
            .with("holds", true)
    }

    #[test]
    fn line_form() {
        let r = sample();
        assert_eq!(
            r.to_line(),
            "record=count kind=cover k=2 mask={1,3} empty={} value=-123456789012345678901234567890 \
             bound=1.9344 whole=2.0 holds=true"
        );
        assert_eq!(Record::parse(&r.to_line()).unwrap(), r);
    }

    #[test]
    fn json_form() {
        let r = sample();
        let json = r.to_json();
        assert!(json.starts_with(r#"{"record":"count","kind":"cover","k":2,"mask":[1,3],"empty":[]"#), "{json}");
        assert!(json.contains(r#""value":-123456789012345678901234567890"#), "{json}");
        assert_eq!(Record::parse(&json).unwrap(), r);
    }

    #[test]
    fn malformed() {
        assert!(Record::parse_line("a=1 b").is_err());
        assert!(Record::parse_line("a=").is_err());
        assert!(Record::parse_line("a={1,x}").is_err());
        assert!(Record::parse_json("[1]").is_err());
    }
}
