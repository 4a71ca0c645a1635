//! Declaration language, JSON documents, table emitter and test corpora for `theta-core`.

pub mod ast;
pub mod corpus;
pub mod oracles;
pub mod parse;
pub mod session;
pub mod tables;

use serde_json::{json, Value as Json};

use session::{EvalError, Outcome};

/// Version of the JSON document layout described in `docs/json-schema.md`.
pub const SCHEMA_VERSION: &str = "1.0";

/// The JSON document for a successful command.
pub fn document(o: &Outcome) -> Json {
    let checks: Vec<Json> = o.checks.iter().map(|(name, passed)| json!({"name": name, "passed": passed})).collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "input": o.input,
        "operation": o.operation,
        "output": o.output,
        "provenance": o.provenance,
        "invariant_checks": checks,
    })
}

/// The JSON document for a failed statement.
pub fn error_document(input: &str, e: &EvalError) -> Json {
    json!({
        "schema_version": SCHEMA_VERSION,
        "input": input,
        "operation": "error",
        "error": {"code": e.code, "message": e.message, "line": e.pos.line, "column": e.pos.column},
    })
}
