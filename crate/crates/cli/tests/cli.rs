//! End-to-end runs of the binary: documented examples, exit codes and schema
//! conformance of every emitted document.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use quasiforest::{to_graph6, Family};
use serde_json::{json, Value};

const BIN: &str = env!("CARGO_BIN_EXE_quasiforest");

fn crate_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn fixture(name: &str) -> String {
    crate_path("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() })
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn stdout_lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone()).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn assert_schema(schema: &str, doc: &Value) {
    let text = std::fs::read_to_string(crate_path("schema").join(schema)).unwrap();
    let validator = jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}\n{doc}");
}

#[test]
fn analyze_c4() {
    let out = run(&["analyze", "Cl"], None);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_schema("analyze.schema.json", &v);
    assert_eq!(v["complement_chordal"], true);
    assert_eq!(v["pd"], 3);
    assert_eq!(v["max_deg"], 2);
    assert_eq!(v["conjecture_holds"], false);
    assert_eq!(v["witness"], Value::Null);
    assert_eq!(v["facets"], json!([[0, 2], [1, 3]]));
    assert_eq!(v["r"], json!([-1]));
    assert_eq!(v["hilbert_numerator"], json!([1, 0, -4, 4, -1]));
    assert_eq!(v["betti"], json!([[0, 0, 1], [1, 2, 4], [2, 3, 4], [3, 4, 1]]));
    assert_eq!(v["depth"], 1);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["cm"], false);
}

#[test]
fn analyze_input_sources_agree() {
    let positional = run(&["analyze", "Cl"], None);
    let edges = run(&["analyze", "--edges", "4 0 1 1 2 2 3 3 0"], None);
    let stdin = run(&["analyze", "--stdin"], Some("Cl\n"));
    assert_eq!(positional.stdout, edges.stdout);
    assert_eq!(positional.stdout, stdin.stdout);
}

#[test]
fn analyze_complete_and_edgeless() {
    let v = stdout_json(&run(&["analyze", "C~"], None));
    assert_schema("analyze.schema.json", &v);
    assert_eq!(v["conjecture_holds"], true);

    let v = stdout_json(&run(&["analyze", "C?"], None));
    assert_schema("analyze.schema.json", &v);
    assert_eq!(v["facets"], json!([[0, 1, 2, 3]]));
    assert_eq!(v["pd"], 0);
    assert_eq!(v["max_deg"], 0);
    assert_eq!(v["conjecture_holds"], true);
}

#[test]
fn analyze_non_chordal_complement() {
    // C5 is self-complementary
    let out = run(&["analyze", "--edges", "5 0 1 1 2 2 3 3 4 4 0"], None);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_schema("analyze.schema.json", &v);
    assert_eq!(v["complement_chordal"], false);
    assert_eq!(v["chordless_cycle"].as_array().unwrap().len(), 5);
    for key in ["facets", "pd", "hilbert_numerator", "betti", "conjecture_holds"] {
        assert_eq!(v[key], Value::Null, "{key}");
    }
}

#[test]
fn analyze_pretty_is_a_table() {
    let out = run(&["analyze", "C?", "--pretty"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("pd ") && l.trim_end().ends_with(" 0")));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["analyze", "C"][..],
        &["analyze", "C!"],
        &["analyze", "--edges", "3 0"],
        &["analyze", "--edges", "3 0 7"],
        &["analyze"],
        &["analyze", "Cl", "--edges", "2"],
    ] {
        let out = run(args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn survey_two_vertices() {
    let out = run(&["survey", "--all-labeled", "2"], None);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 3);
    for line in &lines {
        assert_schema("survey.schema.json", line);
    }
    assert!(lines[..2].iter().all(|l| l["conjecture_holds"] == true));
    assert_eq!(lines[2]["summary"]["total"], 2);
}

#[test]
fn survey_four_vertices() {
    let out = run(&["survey", "--all-labeled", "4", "--jobs", "3"], None);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 65);
    for line in &lines {
        assert_schema("survey.schema.json", line);
    }
    let summary = &lines[64]["summary"];
    assert_eq!(summary["total"], 64);
    assert_eq!(summary["counterexamples"], json!(["C]", "Cl", "Cr"]));
    // summary counts equal the line tallies
    let graphs = &lines[..64];
    let linear = graphs.iter().filter(|l| l["complement_chordal"] == true).count();
    let holds = graphs.iter().filter(|l| l["conjecture_holds"] == true).count();
    let fails = graphs.iter().filter(|l| l["conjecture_holds"] == false).count();
    assert_eq!(summary["2linear"], linear);
    assert_eq!(summary["holds"], holds);
    assert_eq!(summary["fails"], fails);
    assert_eq!(holds + fails, linear);
}

#[test]
fn survey_only_2linear_filter() {
    let all = stdout_lines(&run(&["survey", "--all-labeled", "5"], None));
    let filtered = stdout_lines(&run(&["survey", "--all-labeled", "5", "--only-2linear"], None));
    let expected: Vec<&Value> = all[..all.len() - 1].iter().filter(|l| l["complement_chordal"] == true).collect();
    assert_eq!(filtered.len() - 1, expected.len());
    assert!(filtered[..expected.len()].iter().zip(expected).all(|(a, b)| a == b));
}

#[test]
fn survey_skips_bad_lines() {
    let out = run(&["survey"], Some("Cl\nnot graph6!\n\nC~\n?\n"));
    assert_eq!(out.status.code(), Some(1));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["input"], "Cl");
    assert_eq!(lines[1]["input"], "C~");
    assert_eq!(lines[2]["summary"]["skipped"], 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("line 5"), "{err}");
}

#[test]
fn survey_size_cap() {
    assert_eq!(run(&["survey", "--all-labeled", "8"], None).status.code(), Some(3));
}

#[test]
fn oracle_examples() {
    let v = stdout_json(&run(&["oracle", "Cl"], None));
    assert_schema("oracle.schema.json", &v);
    assert_eq!(v["betti"], json!([[0, 0, 1], [1, 2, 4], [2, 3, 4], [3, 4, 1]]));
    assert_eq!(v["match"], true);

    let v = stdout_json(&run(&["oracle", "C?"], None));
    assert_schema("oracle.schema.json", &v);
    assert_eq!(v["betti"], json!([[0, 0, 1]]));
    assert_eq!(v["match"], true);

    let out = run(&["oracle", "--complex", &fixture("hollow_triangle.txt")], None);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_schema("oracle.schema.json", &v);
    assert_eq!(v["2linear"], false);
    assert_eq!(v["match"], Value::Null);
}

#[test]
fn oracle_size_cap() {
    assert_eq!(run(&["oracle", "--complex", &fixture("simplex13.txt")], None).status.code(), Some(3));
}

#[test]
fn decompose_examples() {
    let v = stdout_json(&run(&["decompose", "Cl"], None));
    assert_schema("decompose.schema.json", &v);
    assert_eq!(v["facets"], json!([[0, 2], [1, 3]]));
    assert_eq!(v["r"], json!([-1]));

    let k33 = to_graph6(&Family::CompleteBipartite.graph(3).unwrap()).unwrap();
    let v = stdout_json(&run(&["decompose", &k33], None));
    assert_schema("decompose.schema.json", &v);
    assert_eq!(v["facets"], json!([[0, 1, 2], [3, 4, 5]]));
    assert_eq!(v["d"], json!([2, 2]));
    assert_eq!(v["r"], json!([-1]));

    let v = stdout_json(&run(&["decompose", "--complex", &fixture("two_edges.txt")], None));
    assert_eq!(v["facets"], json!([[0, 2], [1, 3]]));
}

#[test]
fn decompose_rejections_exit_4() {
    let out = run(&["decompose", "--complex", &fixture("hollow_triangle.txt")], None);
    assert_eq!(out.status.code(), Some(4));
    let v = stdout_json(&out);
    assert_schema("decompose.schema.json", &v);
    assert_eq!(v["reason"], "not-flag");

    let out = run(&["decompose", "--edges-are-not-an-option"], None);
    assert_eq!(out.status.code(), Some(2));

    // complement of C5 is C5, whose skeleton is not chordal
    let out = run(&["decompose", "Dhc"], None);
    assert_eq!(out.status.code(), Some(4));
    let v = stdout_json(&out);
    assert_schema("decompose.schema.json", &v);
    assert_eq!(v["reason"], "skeleton-not-chordal");
    assert_eq!(v["chordless_cycle"].as_array().unwrap().len(), 5);
}

#[test]
fn gap_families() {
    for (family, r, gap) in [("complete-bipartite", "4", 3), ("barbell", "5", 3)] {
        let out = run(&["gap", "--family", family, "--r", r], None);
        assert!(out.status.success(), "{family}");
        let v = stdout_json(&out);
        assert_schema("gap.schema.json", &v);
        assert_eq!(v["gap"], gap);
    }
    assert_eq!(run(&["gap", "--family", "petersen", "--r", "3"], None).status.code(), Some(2));
}

#[test]
fn long_form_graph6_is_a_size_cap() {
    assert_eq!(run(&["analyze", "~??~"], None).status.code(), Some(3));
}
