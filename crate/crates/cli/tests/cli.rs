use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn comical(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comical")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn make(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["make"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    let o = comical(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn boxnf_normalizes() {
    let o = comical(&["boxnf", "d1,0;s1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "id");
    let o = comical(&["boxnf", "s1;g1,0"]);
    assert_eq!(stdout(&o).trim(), "s1;g1,0");
    assert!(!comical(&["boxnf", "q7"]).status.success());
}

#[test]
fn pseudo_tensor_of_intervals_marks_the_square() {
    let dir = tempfile::tempdir().unwrap();
    let c1 = make(dir.path(), "c1.json", &["cube", "1"]);
    let o = comical(&["tensor", "--mode", "pseudo", &c1, &c1]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let marked: Vec<(u64, bool)> = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["dim"].as_u64().unwrap(), c["marked"].as_bool().unwrap()))
        .collect();
    assert_eq!(marked.len(), 9);
    assert!(marked.iter().all(|&(d, m)| m == (d == 2)));
    let o = comical(&["tensor", "--mode", "lax", &c1, &c1]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["cells"].as_array().unwrap().iter().all(|c| !c["marked"].as_bool().unwrap()));
}

#[test]
fn compare_reports_iso() {
    let dir = tempfile::tempdir().unwrap();
    let c1 = make(dir.path(), "c1.json", &["cube", "1"]);
    let m1 = make(dir.path(), "m1.json", &["marked-cube", "1"]);
    for mode in ["lax", "pseudo"] {
        let o = comical(&["compare", "--mode", mode, &c1, &m1]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), "iso: true");
    }
}

#[test]
fn written_objects_load_back() {
    let dir = tempfile::tempdir().unwrap();
    let x = make(dir.path(), "x.json", &["comical-cube", "2", "1", "0"]);
    let out = dir.path().join("t.json").to_string_lossy().into_owned();
    let o = comical(&["triangulate", &x, "-o", &out]);
    assert!(o.status.success());
    let o = comical(&["reflect", &out]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn malformed_objects_name_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"dims": 1, "cells": [{"id": "a", "dim": 0}, {"id": "f", "dim": 1, "faces": {}}]}"#).unwrap();
    let bad = bad.to_string_lossy().into_owned();
    let o = comical(&["tensor", &bad, &bad]);
    assert!(!o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("$.cells[1].faces"), "{err}");
}

#[test]
fn ho1_of_the_free_isomorphism() {
    let dir = tempfile::tempdir().unwrap();
    let x = make(dir.path(), "x.json", &["nerve-iso", "2"]);
    let o = comical(&["ho1", &x]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("objects: a, b"));
    assert_eq!(text.lines().filter(|l| l.contains(" ∘ ")).count(), 2);
}

#[test]
fn rlp_against_comical_generators() {
    let dir = tempfile::tempdir().unwrap();
    let nerve = make(dir.path(), "n.json", &["nerve-chain", "2", "3"]);
    assert!(comical(&["rlp", &nerve, "--comical", "3"]).status.success());
    let flat = make(dir.path(), "c.json", &["cube", "1"]);
    let o = comical(&["rlp", &flat, "--comical", "3"]);
    assert!(!o.status.success());
    assert!(stdout(&o).contains("box(3,1,0): fails"));
}

#[test]
fn suites_are_reproducible() {
    let run = || {
        let o = comical(&["suite", "boxcat-oracle", "--json"]);
        assert!(o.status.success());
        let mut v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        v.as_object_mut().unwrap().remove("wall_ms");
        v
    };
    let a = run();
    assert_eq!(a["suite"], "boxcat-oracle");
    assert_eq!(a, run());
}

#[test]
fn unknown_suite_is_an_error() {
    let o = comical(&["suite", "nope"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
}
