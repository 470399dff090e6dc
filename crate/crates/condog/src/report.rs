//! JSON-facing result types. Unbounded game values serialize as the string
//! sentinel "infinity", never as a number.

use condog_core::{GameValue, Turn};
use serde::ser::Serializer;
use serde::Serialize;

/// Game value with the "infinity" string encoding.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct JsonValue(pub GameValue);

impl Serialize for JsonValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            GameValue::Finite(k) => s.serialize_u32(k),
            GameValue::Infinite => s.serialize_str("infinity"),
        }
    }
}

pub fn turn_name(t: Turn) -> &'static str {
    match t {
        Turn::Dominator => "dominator",
        Turn::Staller => "staller",
    }
}

/// One solve, as printed by `solve`.
#[derive(Serialize, Debug)]
pub struct ResultRecord {
    pub graph: String,
    pub predominated: Vec<String>,
    pub first: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<JsonValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub nodes: u64,
    pub elapsed_ms: u64,
}

/// One violating instance inside a suite report, with enough data to
/// reproduce the check.
#[derive(Serialize, Debug, Clone)]
pub struct Violation {
    pub graph: String,
    pub detail: String,
}

#[derive(Serialize, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub instances_checked: u64,
    /// Instances abandoned on a solver budget; never counted as passes.
    pub skipped: u64,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}
