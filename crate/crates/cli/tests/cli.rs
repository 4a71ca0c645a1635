//! The `theta` binary: exit codes, JSON documents and byte-stable table output.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use theta_cli::tables::emit_tables;

fn theta(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_theta"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn theta");
    child.stdin.take().expect("stdin").write_all(stdin.as_bytes()).expect("write stdin");
    child.wait_with_output().expect("theta output")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON document per line"))
        .collect()
}

const PROGRAM: &str = "\
char chi
sc tau { omega = chi }
rep pi = pi_gen(tau)
lift gsp4 pi
lparam pi
adjoint pi
generic-check pi
dichotomy pi_ng(tau)
lift gso22 tau ⊠ tau
";

/// Exercises every operation once.
const EVERY_OPERATION: &str = "\
char chi
char x unramified
char y unramified
char z unramified
sc tau { omega = chi }
sc tau2 { omega = chi }
sc tau3 { omega = chi^2 }
rep pi = pi_gen(tau)
pi
lift gsp4 pi
lift gsp4 pi_ng(tau)
lift gso22 tau ⊠ tau2
lift gso40 D(tau) ⊠ D(tau2)
preimage gso22 pi
preimage gso40 pi_ng(tau)
dichotomy pi
lparam St_PGSp4(chi)
adjoint J_B(nu^(3/2), nu^(1/2); chi)
generic-check J_B(nu, nu^(1/2); chi)
classify I_QZ(1, tau)
classify I_B(x*nu^2, y; z)
compat tau3 ⊠ st(chi)
satake x, y, z
jacquet m=6 n=2 k=1
jacquet m=8 n=3 t=2 r=4 isometry
";

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schema.json"))
        .expect("published schema");
    jsonschema::validator_for(&serde_json::from_str(&text).expect("schema is JSON")).expect("valid schema")
}

#[test]
fn every_document_validates_against_the_published_schema() {
    let schema = schema();
    let mut docs = Vec::new();
    let out = theta(&["--json"], EVERY_OPERATION);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let ops: BTreeSet<String> = json_lines(&out).iter().map(|d| d["operation"].as_str().unwrap().to_string()).collect();
    assert_eq!(ops.len(), 11, "{ops:?}");
    docs.extend(json_lines(&out));
    docs.extend(json_lines(&theta(&["--json"], "char a\nrep x = St(a,, a)\n")));
    docs.extend(json_lines(&theta(&["--json"], "char a\nrep x = St(a, a)\n")));
    docs.extend(json_lines(&theta(&["--emit-tables", "--json"], "")));
    docs.extend(json_lines(&theta(&["--check", "all", "--json"], "")));
    docs.extend(json_lines(&theta(&["--jacquet", "--m", "4", "--n", "3", "--side", "orth", "--t", "1", "--json"], "")));
    assert!(docs.len() > 40);
    for d in &docs {
        let errors: Vec<String> = schema.iter_errors(d).map(|e| format!("{} at {}", e, e.instance_path())).collect();
        assert!(errors.is_empty(), "{d}\n{}", errors.join("\n"));
    }
    let bad = serde_json::json!({"schema_version": "1.0", "input": "x", "operation": "lift", "output": {}, "provenance": null});
    assert!(!schema.is_valid(&bad));
}

#[test]
fn program_documents_follow_the_schema() {
    let out = theta(&["--json"], PROGRAM);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let docs = json_lines(&out);
    let ops: Vec<&str> = docs.iter().map(|d| d["operation"].as_str().unwrap()).collect();
    assert_eq!(ops, ["lift", "lparam", "adjoint", "generic-check", "dichotomy", "lift"]);
    for d in &docs {
        let keys: Vec<&str> = d.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["input", "invariant_checks", "operation", "output", "provenance", "schema_version"]);
        assert_eq!(d["schema_version"], "1.0");
        for c in d["invariant_checks"].as_array().unwrap() {
            assert!(c["name"].is_string());
            assert_eq!(c["passed"], true, "{d}");
        }
    }
    assert_eq!(docs[0]["provenance"], "Table1.NDS(b)");
    assert_eq!(docs[0]["output"]["gso33"], "J_P(tau, tau) ⊠ chi");
    assert_eq!(docs[5]["provenance"], "Table2.a");
    assert_eq!(docs[5]["output"]["gsp4"], "pi_gen(tau)");
}

#[test]
fn syntax_errors_exit_one_with_a_position() {
    let out = theta(&["--json"], "char a\nrep x = St(a,, a)\n");
    assert_eq!(out.status.code(), Some(1));
    let docs = json_lines(&out);
    assert_eq!(docs.len(), 1);
    let e = &docs[0]["error"];
    assert_eq!(
        (e["code"].as_str(), e["line"].as_u64(), e["column"].as_u64()),
        (Some("syntax_error"), Some(2), Some(14))
    );
    assert_eq!(docs[0]["input"], "rep x = St(a,, a)");
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 14"));
}

#[test]
fn evaluation_errors_exit_one() {
    for (src, code) in
        [("rep x = mystery\n", "unknown_symbol"), ("char a\nchar a\n", "shadowing"), ("char st\n", "reserved_name")]
    {
        let out = theta(&["--json"], src);
        assert_eq!(out.status.code(), Some(1), "{src}");
        let docs = json_lines(&out);
        assert_eq!(docs.last().unwrap()["error"]["code"], code, "{src}");
    }
}

#[test]
fn emitted_tables_are_byte_stable() {
    let a = theta(&["--emit-tables"], "");
    let b = theta(&["--emit-tables"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let expected: String = emit_tables().iter().map(|r| format!("{r}\n")).collect();
    assert_eq!(String::from_utf8(a.stdout).unwrap(), expected);
    let json = json_lines(&theta(&["--emit-tables", "--json"], ""));
    assert_eq!(json.len(), 19);
    assert!(json.iter().all(|r| r["columns"].is_array() && r["provenance"].is_string()));
}

#[test]
fn jacquet_mode() {
    let out = theta(&["--jacquet", "--m", "6", "--n", "2", "--side", "sympl", "--k", "1", "--json"], "");
    assert_eq!(out.status.code(), Some(0));
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["input"], "jacquet m=6 n=2 k=1");
    assert_eq!(doc["output"]["quotients"].as_array().unwrap().len(), 2);
    let missing_index = theta(&["--jacquet", "--m", "6", "--n", "2", "--side", "orth"], "");
    assert_eq!(missing_index.status.code(), Some(1));
}

#[test]
fn every_oracle_passes() {
    let out = theta(&["--check", "all", "--json"], "");
    assert_eq!(out.status.code(), Some(0));
    let docs = json_lines(&out);
    assert_eq!(docs.len(), 9);
    assert!(docs.iter().all(|d| d["passed"] == true && d["cases"].as_u64() > Some(0)));
    assert_eq!(theta(&["--check", "nonsense"], "").status.code(), Some(1));
}
