//! Problem specification files.
//!
//! ```json
//! {
//!   "algebra": {"series": "A", "rank": 2},
//!   "level": "-3/2",
//!   "highest_weights": [
//!     {"label": "0", "weight": ["0", "0"]},
//!     {"label": "L1", "weight": ["-3/2", 0]}
//!   ],
//!   "orbit_cap": 1000000
//! }
//! ```
//!
//! Rationals are strings `"p/q"` or `"n"`, or JSON integers. Floats are
//! rejected. Every diagnostic names the offending field path.

use serde_json::{Map, Value};
use weightfam_core::rational;
use weightfam_core::{AlgebraType, HighestWeightInput, RootSystem, Series, Weight, Q};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub algebra: AlgebraType,
    pub level: Q,
    pub highest_weights: Vec<HighestWeightInput>,
    pub orbit_cap: Option<usize>,
}

fn invalid(path: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Spec(format!("{path}: {msg}"))
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, name: &str) -> Result<&'a Value, CliError> {
    obj.get(name).ok_or_else(|| invalid(path, format!("missing field `{name}`")))
}

fn rational_value(v: &Value, path: &str) -> Result<Q, CliError> {
    match v {
        Value::String(s) => rational::parse(s).map_err(|e| invalid(path, e)),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(rational::q(i)),
            None => Err(invalid(path, format!("{n} is not an integer; write fractions as \"p/q\" strings"))),
        },
        other => Err(invalid(path, format!("expected a rational, found {}", kind(other)))),
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn algebra(v: &Value) -> Result<AlgebraType, CliError> {
    let path = "algebra";
    let obj = v.as_object().ok_or_else(|| invalid(path, format!("expected an object, found {}", kind(v))))?;
    let series_v = field(obj, path, "series")?;
    let series: Series = series_v
        .as_str()
        .ok_or_else(|| invalid("algebra.series", "expected a string"))?
        .parse()
        .map_err(|e| invalid("algebra.series", e))?;
    let rank =
        field(obj, path, "rank")?.as_u64().ok_or_else(|| invalid("algebra.rank", "expected a non-negative integer"))?;
    AlgebraType::new(series, rank as usize).map_err(|e| invalid(path, e))
}

fn highest_weights(v: &Value, rank: usize) -> Result<Vec<HighestWeightInput>, CliError> {
    let list = v.as_array().ok_or_else(|| invalid("highest_weights", "expected an array"))?;
    let mut out = Vec::with_capacity(list.len());
    for (i, entry) in list.iter().enumerate() {
        let path = format!("highest_weights[{i}]");
        let obj =
            entry.as_object().ok_or_else(|| invalid(&path, format!("expected an object, found {}", kind(entry))))?;
        let label = match obj.get("label") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(other) => {
                return Err(invalid(&format!("{path}.label"), format!("expected a string, found {}", kind(other))))
            }
        };
        let wpath = format!("{path}.weight");
        let labels =
            field(obj, &path, "weight")?.as_array().ok_or_else(|| invalid(&wpath, "expected an array of rationals"))?;
        if labels.len() != rank {
            return Err(invalid(&wpath, format!("has {} labels, expected {rank}", labels.len())));
        }
        let labels = labels
            .iter()
            .enumerate()
            .map(|(j, x)| rational_value(x, &format!("{wpath}[{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(HighestWeightInput { label, weight: Weight::new(labels) });
    }
    Ok(out)
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let root: Value = serde_json::from_str(text)
            .map_err(|e| CliError::Spec(format!("line {} column {}: {e}", e.line(), e.column())))?;
        let obj = root.as_object().ok_or_else(|| invalid("<root>", "expected an object"))?;
        for key in obj.keys() {
            if !["algebra", "level", "highest_weights", "orbit_cap"].contains(&key.as_str()) {
                return Err(invalid(key, "unknown field"));
            }
        }
        let algebra = algebra(field(obj, "<root>", "algebra")?)?;
        let level = rational_value(field(obj, "<root>", "level")?, "level")?;
        let highest_weights = highest_weights(field(obj, "<root>", "highest_weights")?, algebra.rank())?;
        let orbit_cap = match obj.get("orbit_cap") {
            None | Some(Value::Null) => None,
            Some(v) => match v.as_u64() {
                Some(c) if c >= 1 => Some(c as usize),
                _ => return Err(invalid("orbit_cap", "expected a positive integer")),
            },
        };
        Ok(ProblemSpec { algebra, level, highest_weights, orbit_cap })
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem::new(self.algebra)
    }
}
