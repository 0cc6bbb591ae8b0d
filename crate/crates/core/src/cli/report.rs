use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::matrix_file::write_matrix;
use crate::lattice::{IntMatrix, IntVec};

pub const SCHEMA: &str = "toric-robust/report/v1";

/// One CLI invocation's result.
///
/// `command` echoes only the arguments that determine the result; execution
/// knobs (`--threads`, `--cache-dir`, `-o`, `--json`) are left out so equal
/// computations give byte-identical reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: Value,
    pub input_hash: String,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    pub status: &'static str,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// `sha256:<hex>` of the canonical text form of `m`.
pub fn matrix_hash(m: &IntMatrix) -> String {
    format!(
        "sha256:{}",
        hex::encode(Sha256::digest(write_matrix(m).as_bytes()))
    )
}

/// JSON number when the value fits in 64 bits, decimal string otherwise.
pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn vec_json(v: &IntVec) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vec_json(&m.row(r))).collect())
}

/// Single-line error record written to stderr.
pub fn error_json(kind: &str, code: i32, message: &str) -> String {
    let v = json!({
        "schema": SCHEMA,
        "status": "error",
        "error": { "kind": kind, "code": code, "message": message },
        "exit_code": code,
    });
    let mut s = serde_json::to_string(&v).expect("error serializes");
    s.push('\n');
    s
}
