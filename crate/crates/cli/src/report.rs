use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Envelope for every command's JSON output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub results: Value,
    pub warnings: Vec<String>,
    pub version: String,
}

impl Report {
    pub fn new(command: &str, parameters: Map<String, Value>, results: Value) -> Self {
        Report {
            command: command.to_string(),
            parameters,
            results,
            warnings: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn warn(mut self, w: impl IntoIterator<Item = String>) -> Self {
        self.warnings.extend(w);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Builds a parameter map from `(name, value)` pairs, skipping absent values.
#[macro_export]
macro_rules! params {
    ($($key:literal => $val:expr),* $(,)?) => {{
        let mut m = serde_json::Map::new();
        $(
            let v = serde_json::to_value(&$val).expect("parameter serializes");
            if !v.is_null() {
                m.insert($key.to_string(), v);
            }
        )*
        m
    }};
}
