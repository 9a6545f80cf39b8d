use std::process::{Command, Output};

fn wang(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wang")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dominoes_lists_pairs() {
    let o = wang(&["dominoes", "U", "--dir", "2", "--radius", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 35);
    assert_eq!(lines[0], "0 8");
}

#[test]
fn patterns_and_markers() {
    let o = wang(&["patterns", "U", "--shape", "2x2", "--radius", "2"]);
    assert_eq!(stdout(&o).split("\n\n").count(), 50);
    let o = wang(&["markers", "U", "--dir", "2", "--radius", "2"]);
    assert_eq!(stdout(&o).trim(), "{0,1,2,3,4,5,6,7}@e2");
    let o = wang(&["markers", "U", "--dir", "2", "--radius", "2", "--verify", "0-7"]);
    assert_eq!(o.status.code(), Some(0));
    let o = wang(&["markers", "U", "--dir", "2", "--radius", "2", "--verify", "0-6"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn derive_writes_the_morphism() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("alpha.json");
    let out = dir.path().join("V.txt");
    let o = wang(&[
        "derive", "U", "--markers", "0-7@2", "--radius", "2", "--target", "V",
        "--morphism", m.to_str().unwrap(), "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let exported = wang(&["corpus", "export", "alpha"]);
    assert_eq!(std::fs::read_to_string(&m).unwrap(), stdout(&exported));
    let v = wang(&["corpus", "export", "V"]);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), stdout(&v));
}

#[test]
fn iterate_and_render() {
    let o = wang(&["iterate", "omega", "4", "5"]);
    let rows: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.split_whitespace().count() == 13));
    let svg = wang(&["iterate", "omega", "4", "5", "--format", "svg"]);
    assert!(stdout(&svg).starts_with("<?xml"));
    let stone = wang(&["render", "stone", "12", "1"]);
    assert_eq!(stdout(&stone).matches("<rect").count(), 4);
    let table = wang(&["render", "morphism", "omega", "--format", "tikz"]);
    assert_eq!(table.status.code(), Some(0));
    let bad = wang(&["iterate", "omega", "4", "1", "--format", "png"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn spectral_json() {
    let o = wang(&["spectral", "omega", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["primitivityExponent"], 7);
    assert_eq!(v["perronValueExact"], "1+φ");
}

#[test]
fn exit_codes() {
    assert_eq!(wang(&["corpus", "export", "X"]).status.code(), Some(2));
    assert_eq!(wang(&["dominoes", "missing.txt", "--dir", "1", "--radius", "1"]).status.code(), Some(2));
    assert_eq!(wang(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(wang(&["certify", "U", "--plan", "2:2"]).status.code(), Some(2));
}

#[test]
fn periodic_set_is_not_certified() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.txt");
    std::fs::write(&path, "A B A B\n").unwrap();
    let o = wang(&["certify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["conclusion"]["aperiodic"], false);
    assert_eq!(v["steps"][0]["status"], "fail");
}

#[test]
fn explicit_plan_matches_auto() {
    let a: serde_json::Value = serde_json::from_slice(&wang(&["certify", "U"]).stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&wang(&["certify", "U", "--plan", "2:2,1:1"]).stdout).unwrap();
    assert_eq!(a["conclusion"], b["conclusion"]);
    assert_eq!(a["steps"][2], b["steps"][2]);
}
