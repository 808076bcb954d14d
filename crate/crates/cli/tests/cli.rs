use std::process::{Command, Output};

use serde_json::Value;

fn qhorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhorder")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn column<'a>(v: &'a Value, key: &str) -> Vec<&'a Value> {
    v["labels"].as_array().unwrap().iter().map(|l| &l[key]).collect()
}

#[test]
fn biset_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("order.json");
    let out = qhorder(&["biset-order", "--catalog", "builtin:1,C2,C3", "--format", "json", "--out", path.to_str().unwrap()]);
    stdout(&out);
    let text = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["labels"].as_array().unwrap().len(), 4);
    assert_eq!(column(&v, "group"), ["1", "C2", "C3", "C3"]);
    assert!(column(&v, "survives").iter().all(|s| s.as_bool().unwrap()));
    for key in ["sq", "unlhd", "leq"] {
        let m = v[key].as_array().unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.iter().enumerate().all(|(k, row)| row[k] == 1));
    }
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn c2_catalog_orders_agree() {
    let v: Value = serde_json::from_str(&stdout(&qhorder(&["biset-order", "--catalog", "builtin:1,C2", "--format", "json"]))).unwrap();
    assert_eq!(v["unlhd"], v["leq"]);
    assert_eq!(v["unlhd"], serde_json::json!([[1, 0], [1, 1]]));
}

#[test]
fn csv_has_one_line_per_pair() {
    let text = stdout(&qhorder(&["biset-order", "--catalog", "builtin:1,C2,C3", "--format", "csv"]));
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "from_i,from_r,to_i,to_r,sq,unlhd,leq");
    assert_eq!(lines.count(), 16);
}

#[test]
fn custom_catalog_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.json");
    std::fs::write(&path, r#"{"groups": ["1", {"name": "K", "generators": ["(0 1)", "(2 3)"]}, "C2"]}"#).unwrap();
    let v: Value = serde_json::from_str(&stdout(&qhorder(&[
        "biset-order",
        "--catalog",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--verify",
    ])))
    .unwrap();
    assert_eq!(column(&v, "group")[..2], ["1", "C2"]);
    assert_eq!(v["labels"].as_array().unwrap().len(), 5);
}

#[test]
fn rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.json");
    std::fs::write(&path, r#"{"groups": ["1", "C4"]}"#).unwrap();
    let out = qhorder(&["biset-order", "--catalog", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("C4"));
    assert!(!qhorder(&["brauer-order", "--n", "4", "--delta", "0"]).status.success());
    assert!(!qhorder(&["brauer-order", "--n", "4", "--delta", "x"]).status.success());
    assert!(!qhorder(&["oracle-check", "--suite", "huge"]).status.success());
    assert!(!qhorder(&["char-table", "--group", "Q8"]).status.success());
}

#[test]
fn table1_marks_survivors() {
    let text = stdout(&qhorder(&["table1"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 28);
    assert_eq!(lines[0].matches('*').count(), 15);
    assert!(lines[0].contains("(7,3)*") && !lines[0].contains("(7,2)*"));
}

#[test]
fn brauer_json_independent_of_delta_and_jobs() {
    let a = stdout(&qhorder(&["brauer-order", "--n", "6", "--format", "json"]));
    let b = stdout(&qhorder(&["--jobs", "4", "brauer-order", "--n", "6", "--delta", "7/2", "--format", "json"]));
    let (va, vb): (Value, Value) = (serde_json::from_str(&a).unwrap(), serde_json::from_str(&b).unwrap());
    assert_eq!(va["labels"].as_array().unwrap().len(), 19);
    assert_eq!(vb["delta"], "7/2");
    for key in ["labels", "sq", "unlhd", "leq"] {
        assert_eq!(va[key], vb[key]);
    }
}

#[test]
fn parallel_biset_matches_serial() {
    let serial = stdout(&qhorder(&["biset-order", "--format", "csv"]));
    let parallel = stdout(&qhorder(&["--jobs", "4", "biset-order", "--format", "csv"]));
    assert_eq!(serial, parallel);
}

#[test]
fn character_table_of_s4() {
    let text = stdout(&qhorder(&["char-table", "--group", "S4"]));
    assert!(text.starts_with("order 24  classes 5"));
    assert_eq!(text.lines().filter(|l| l.starts_with('χ')).count(), 5);
    let aut = stdout(&qhorder(&["char-table", "--group", "C5", "--aut"]));
    assert!(aut.starts_with("order 4  classes 4"));
}
