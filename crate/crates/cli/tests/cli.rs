//! End-to-end runs of the binary: the documented command surfaces, file
//! formats, exit codes, and output determinism.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn write_file(dir: &tempfile::TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

fn raag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raag")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn graph_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write_file(&dir, "p3.g", "a b c\na b\nb c\n");
    let k3 = write_file(&dir, "k3.g", "a b c\na b\nb c\na c\n");

    let out = raag(&["graph", "separators", p3.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{b}");

    let out = raag(&["graph", "cut-cliques", k3.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(none)");

    let out = raag(&["graph", "info", k3.to_str().unwrap(), "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["complete"], true);
}

#[test]
fn parse_errors_exit_with_input_code() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_file(&dir, "bad.g", "a b c\na b c\n");
    let out = raag(&["graph", "info", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "missing line number in: {err}");
}

#[test]
fn word_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write_file(&dir, "p3.g", "a b c\na b\nb c\n");
    let p = p3.to_str().unwrap();

    let out = raag(&["word", "nf", p, "a b a^-1"]);
    assert_eq!(stdout(&out).trim(), "b");

    let out = raag(&["word", "equal", p, "a b", "b a"]);
    assert_eq!(stdout(&out).trim(), "true");

    let out = raag(&["word", "member", p, "a", "--lambda", "b"]);
    assert_eq!(stdout(&out).trim(), "false");
    assert!(out.status.success());
}

#[test]
fn split_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write_file(&dir, "p3.g", "a b c\na b\nb c\n");
    let k3 = write_file(&dir, "k3.g", "a b c\na b\nb c\na c\n");

    let out = raag(&["split", "make", p3.to_str().unwrap(), "--lambda", "b", "--pick", "a", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["lambda"], serde_json::json!(["b"]));
    assert_eq!(json["side1"], serde_json::json!(["a", "b"]));
    assert_eq!(json["side2"], serde_json::json!(["b", "c"]));

    let out = raag(&["split", "classify", p3.to_str().unwrap(), "a c", "--lambda", "b"]);
    assert!(stdout(&out).contains("hyperbolic (length 2)"));

    let out = raag(&["split", "make", k3.to_str().unwrap(), "--lambda", "a"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tree_ball_is_connected_and_acyclic() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write_file(&dir, "p3.g", "a b c\na b\nb c\n");
    let out = raag(&["tree", "ball", p3.to_str().unwrap(), "--lambda", "b", "--L", "2", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let vertices = json["vertex_count"].as_u64().unwrap();
    let edges = json["edge_count"].as_u64().unwrap();
    assert_eq!(vertices, edges + 1, "ball export is not a tree");

    let out = raag(&["tree", "fix", p3.to_str().unwrap(), "b", "--lambda", "b", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(json["count"].as_u64().unwrap() >= 2, "edge-group generator fixes both base endpoints");

    let out = raag(&["tree", "axis", p3.to_str().unwrap(), "a c", "--lambda", "b", "--L", "4", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["translation_length"], 2);
    assert!(json["count"].as_u64().unwrap() > 0);
}

#[test]
fn check_theorem_direct_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write_file(&dir, "p3.g", "a b c\na b\nb c\n");
    let p = p3.to_str().unwrap();

    let out = raag(&["check", "theorem", p, "--lambda", "b", "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["case"], "all_elliptic");
    assert_eq!(json["lambda"], serde_json::json!(["b"]));

    let out = raag(&["check", "theorem", p, "--phi", "1,1,1", "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["case"], "line_excluded");

    let out = raag(&["check", "theorem", p, "--all-separators"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn check_theorem_induced_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let hom = write_file(
        &dir,
        "hom.json",
        r#"{
            "source": {"vertices": ["a", "b", "c"], "edges": [["a","b"], ["b","c"]]},
            "target": {"vertices": ["x", "y"], "edges": []},
            "images": {"a": "x", "b": "", "c": "y"}
        }"#,
    );
    let base = write_file(&dir, "base.json", r#"{"lambda": [], "side1": ["x"], "side2": ["y"]}"#);
    let out = raag(&[
        "check",
        "theorem",
        "--hom",
        hom.to_str().unwrap(),
        "--base",
        base.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["case"], "all_elliptic");
    assert_eq!(json["lambda"], serde_json::json!(["b"]));
    assert_eq!(json["separated"], serde_json::json!(["a", "c"]));
}

#[test]
fn budget_exhaustion_uses_its_own_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let fp = write_file(&dir, "fp.g", "x y\n");
    let out = raag(&["tree", "ball", fp.to_str().unwrap(), "--lambda", "", "--L", "6", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn env_budget_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let fp = write_file(&dir, "fp.g", "x y\n");
    let out = Command::new(env!("CARGO_BIN_EXE_raag"))
        .args(["tree", "ball", fp.to_str().unwrap(), "--lambda", "", "--L", "6"])
        .env("RAAG_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_file(&dir, "c4.g", "a b c d\na b\nb c\nc d\nd a\n");
    let args = ["check", "theorem", c4.to_str().unwrap(), "--lambda", "a,c", "--seed", "7", "--format", "json"];
    let first = stdout(&raag(&args));
    let second = stdout(&raag(&args));
    assert!(!first.is_empty());
    assert_eq!(first, second);

    let args = ["check", "lemmas", c4.to_str().unwrap(), "--lambda", "a,c", "--samples", "20", "--seed", "3", "--format", "json"];
    let first = stdout(&raag(&args));
    let second = stdout(&raag(&args));
    assert_eq!(first, second);
}

#[test]
fn dot_format_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let dot = write_file(&dir, "p3.dot", "graph P3 {\n  a -- b;\n  b -- c;\n}\n");
    let out = raag(&["graph", "cut-vertices", dot.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{b}");
}
