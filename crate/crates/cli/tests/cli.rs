use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    let cache = tempfile::tempdir().unwrap();
    Command::new(env!("CARGO_BIN_EXE_ascent"))
        .args(args)
        .env("ASCENT_CACHE_DIR", cache.path())
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn enumerates_ascent_sequences() {
    let v = json(&["enumerate", "--class", "ASC", "-n", "3"]);
    assert_eq!(v, serde_json::json!(["0,0,0", "0,0,1", "0,1,0", "0,1,1", "0,1,2"]));
}

#[test]
fn reports_statistics() {
    let v = json(&["stats", "0,1,0,2"]);
    assert_eq!((v["asc"].as_u64(), v["rep"].as_u64(), v["zero"].as_u64()), (Some(2), Some(1), Some(2)));
    assert_eq!(v["sets"]["DIST"], serde_json::json!([2, 4]));
}

#[test]
fn table_json_is_loadable() {
    let out = run(&["--format", "json", "table", "--class", "ASC", "-n", "3", "--stats", "rep,max"]);
    assert!(out.status.success());
    let t = ascent::table::DistTable::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(t.total(), 5u32.into());
}

#[test]
fn fishburn_series() {
    let v = json(&["series", "--which", "fishburn", "--order", "5"]);
    assert_eq!(v, serde_json::json!(["0", "1", "2", "5", "15", "53"]));
}

#[test]
fn applies_a_named_bijection() {
    let v = json(&["apply", "--map", "psi_inv", "0,1,0,2"]);
    assert_eq!(v["output"], "2143");
}

#[test]
fn checks_pass() {
    let v = json(&["check", "--name", "foata,zeromax_sym", "--max-n", "5"]);
    let verdicts: Vec<_> = v.as_array().unwrap().iter().map(|r| r["verdict"].as_str().unwrap()).collect();
    assert_eq!(verdicts, ["pass", "pass"]);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(run(&["stats", "0,2"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--name", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--class", "NOPE", "-n", "3"]).status.code(), Some(2));
}

#[test]
fn oversized_request_exits_3() {
    let out = run(&["enumerate", "--class", "ASC", "-n", "30"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource limit"));
}
