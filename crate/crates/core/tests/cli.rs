use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolcodes")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_golay_report() {
    let o = run(&["analyze", "golay23"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["parameters"], serde_json::json!({"n": 23, "k": 12, "d": 7}));
    assert_eq!(v["projective"], true);
    assert_eq!(v["weight_distribution"]["verdict"], "EQUAL");
    assert_eq!(v["weight_distribution"]["bruteforce"]["7"], 253);
    assert_eq!(v["boolean_function"]["field"]["m"], 12);
    assert_eq!(v["boolean_function"]["n_f"], 23);
    assert_eq!(v["defining_set"].as_array().unwrap().len(), 23);
}

#[test]
fn analyze_output_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(run(&["analyze", "bch:n=15,d=5", "--out", path(&a)]).status.code(), Some(0));
    assert_eq!(run(&["analyze", "bch:n=15,d=5", "--out", path(&b)]).status.code(), Some(0));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn analyze_csv() {
    let o = run(&["analyze", "rm:l=1,m=4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("table,key,value\n"));
    assert!(text.contains("bruteforce,8,30\n"));
    assert!(text.contains("spectral,16,1\n"));
}

#[test]
fn analyze_matrix_file_non_projective() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    fs::write(&file, "# repeated column\n1101\n0110\n").unwrap();
    let o = run(&["analyze", path(&file)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("not projective"));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["projective"], false);
    assert!(v["diagnostic"].as_str().unwrap().contains("column"));
    assert!(v["boolean_function"].is_null());
    assert_eq!(v["weight_distribution"]["verdict"], "SKIPPED");
    assert!(v["weight_distribution"]["bruteforce"].is_object());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["analyze", "simplex:k=0"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "nosuchcode"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "golay23", "--max-k", "25"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn build_then_extract() {
    let dir = tempfile::tempdir().unwrap();
    let set = dir.path().join("d.json");
    let matrix = dir.path().join("g.txt");
    fs::write(&set, r#"{"m":4,"modulus":"13","elements":["1","2","4","8","f"]}"#).unwrap();
    let o = run(&["build", path(&set), "--out", path(&matrix)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("[5, 4]"));
    let text = fs::read_to_string(&matrix).unwrap();
    assert_eq!(text.lines().count(), 4);

    let o = run(&["extract", path(&matrix)]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 4);
    assert_eq!(v["elements"].as_array().unwrap().len(), 5);

    // Building from the extracted set reproduces the reduced matrix.
    let set2 = dir.path().join("d2.json");
    let matrix2 = dir.path().join("g2.txt");
    fs::write(&set2, stdout(&o)).unwrap();
    assert_eq!(run(&["build", path(&set2), "--out", path(&matrix2)]).status.code(), Some(0));
    let extracted_once = run(&["extract", path(&matrix2)]);
    assert_eq!(stdout(&extracted_once), stdout(&o));
}

#[test]
fn build_warns_on_multiset_and_rejects_empty() {
    let dir = tempfile::tempdir().unwrap();
    let multi = dir.path().join("m.json");
    fs::write(&multi, r#"{"m":3,"modulus":"b","elements":["1","1","2"]}"#).unwrap();
    let o = run(&["build", path(&multi)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));

    let empty = dir.path().join("e.json");
    fs::write(&empty, r#"{"m":3,"modulus":"b","elements":[]}"#).unwrap();
    assert_eq!(run(&["build", path(&empty)]).status.code(), Some(2));

    let bad = dir.path().join("b.json");
    fs::write(&bad, r#"{"m":3,"modulus":"b","elements":["9"]}"#).unwrap();
    assert_eq!(run(&["build", path(&bad)]).status.code(), Some(2));
}

#[test]
fn extract_rejects_zero_code() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("z.txt");
    fs::write(&file, "000\n000\n").unwrap();
    assert_eq!(run(&["extract", path(&file)]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for suite in ["roundtrip", "spectral", "theorem3", "bivariate", "catalog"] {
        let o = run(&["verify", suite, "--seed", "3", "--trials", "50"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("PASS"));
    }
}

#[test]
fn openproblems_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bundle");
    let o = run(&["openproblems", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let mut names: Vec<String> =
        fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names.len(), 9, "{names:?}");
    assert!(names.iter().filter(|n| n.starts_with("problem")).count() == 7);
    let csv = fs::read_to_string(out.join("summary.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.ends_with(",EQUAL")));
    let golay: Value = serde_json::from_str(&fs::read_to_string(out.join("problem1_golay.json")).unwrap()).unwrap();
    assert_eq!(golay["instances"][0]["code"], "golay23");
}
