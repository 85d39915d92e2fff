use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const PETERSEN: &str = "IheA@GUAo";
const K33: &str = "EFz_";
const C5: &str = "Dhc";
const K13: &str = "Cs";
const K5: &str = "D~{";

fn egk(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_egk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    // a process that rejects its arguments may exit before reading stdin
    let written = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    if let Err(e) = written {
        assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe, "{e}");
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn check_cycle_is_tight() {
    let o = egk(&["check"], C5);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("tight"));
}

#[test]
fn check_petersen_is_strict() {
    let o = egk(&["check", "--json"], PETERSEN);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["certificate"]["kind"], "inequality");
    assert_eq!(v["certificate"]["report"]["lhs"], 12);
    assert_eq!(v["certificate"]["report"]["rhs"], 15);
    assert_eq!(v["verdict"], "strict");
}

#[test]
fn malformed_graph6_reports_byte_offset() {
    let o = egk(&["check"], "D?");
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("byte 2"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn empty_input_is_an_error() {
    assert_eq!(code(&egk(&["check"], "")), 1);
}

#[test]
fn star_is_biregular_extremal() {
    let o = egk(&["extremal", "--json"], K13);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["verdict"], "tight");
    assert_eq!(v["certificate"]["kind"], "biregular");
}

#[test]
fn petersen_is_not_extremal() {
    let o = egk(&["extremal", "--json"], PETERSEN);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["certificate"]["kind"], "not-special");
}

#[test]
fn composed_special_graph() {
    let g = egk(&["generate", "special", "--preset", "alpha-ten"], "");
    assert_eq!(code(&g), 0);
    let o = egk(&["extremal", "--json"], &stdout(&g));
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["certificate"]["kind"], "special");
    assert_eq!(v["quantities"]["alpha"], 10);
    assert_eq!(v["quantities"]["mu"], 10);
}

#[test]
fn complete_graph_is_oracle_only() {
    let o = egk(&["extremal"], K5);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("oracle-only"));
}

#[test]
fn bubble_on_k4_subdivision() {
    let g = egk(&["generate", "bubble", "k4-subdivision"], "");
    let o = egk(&["bubble", "--json"], &stdout(&g));
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["certificate"]["kind"], "bubble");
    assert_eq!(v["verdict"], "not-applicable");
    assert_eq!(code(&egk(&["bubble"], K33)), 3);
}

#[test]
fn nested_bubble_reports_sub_bubble() {
    let g = egk(&["generate", "bubble", "fig2-nested"], "");
    let o = egk(&["bubble"], &stdout(&g));
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("sub-bubble"), "{}", stdout(&o));
}

#[test]
fn generation_is_deterministic() {
    let args = [
        "generate",
        "biregular",
        "2",
        "3",
        "--scale",
        "2",
        "--seed",
        "7",
    ];
    let a = egk(&args, "");
    let b = egk(&args, "");
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let other = egk(
        &[
            "generate",
            "biregular",
            "2",
            "3",
            "--scale",
            "2",
            "--seed",
            "8",
        ],
        "",
    );
    assert_eq!(code(&egk(&["extremal"], &stdout(&other))), 0);
}

#[test]
fn witness_on_k33() {
    let o = egk(&["witness", "--json"], K33);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["certificate"]["kind"], "witness");
    assert_eq!(
        v["certificate"]["pair"]["independent_set"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
    assert_eq!(code(&egk(&["witness"], PETERSEN)), 3);
    assert_eq!(code(&egk(&["witness"], C5)), 1);
}

#[test]
fn trace_and_oracle() {
    let o = egk(&["trace", "--json"], PETERSEN);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["certificate"]["trace"]["alpha"], 4);
    let o = egk(&["oracle", "--json"], PETERSEN);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["alpha"], 4);
    assert_eq!(v["mu"], 5);
}

#[test]
fn json_output_is_byte_stable() {
    let a = egk(&["extremal", "--json"], K33);
    let b = egk(&["extremal", "--json"], K33);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn jobs_preserve_input_order() {
    let corpus = stdout(&egk(&["generate", "enumerate", "10"], ""));
    let one = egk(&["extremal", "--jobs", "1"], &corpus);
    let four = egk(&["extremal", "--jobs", "4"], &corpus);
    assert_eq!(code(&one), 3);
    assert_eq!(one.stdout, four.stdout);
    let inputs: Vec<&str> = corpus.lines().collect();
    let outputs: Vec<String> = stdout(&one)
        .lines()
        .map(|l| l.split('\t').next().unwrap().to_string())
        .collect();
    assert_eq!(inputs, outputs);
}

#[test]
fn corpus_exit_code_prefers_errors() {
    let corpus = format!("{C5}\n{K5}\n{PETERSEN}\n");
    assert_eq!(code(&egk(&["extremal"], &corpus)), 4);
    let o = egk(&["witness"], &format!("{K33}\n{C5}\n"));
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("graph 2"));
}

#[test]
fn edge_list_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k13.el");
    std::fs::write(&path, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let o = egk(&["extremal", path.to_str().unwrap()], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("biregular"));
    let g6 = dir.path().join("k33.g6");
    std::fs::write(&g6, format!("{K33}\n")).unwrap();
    assert_eq!(code(&egk(&["witness", g6.to_str().unwrap()], "")), 0);
}

#[test]
fn oracle_bound_is_enforced() {
    assert_eq!(code(&egk(&["check", "--max-oracle", "65"], C5)), 1);
    let big = stdout(&egk(&["generate", "gnp", "30", "0.2", "--seed", "1"], ""));
    assert_eq!(code(&egk(&["check", "--max-oracle", "20"], &big)), 1);
    assert_eq!(code(&egk(&["check"], &big)), 0);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&egk(&["frobnicate"], "")), 1);
    assert_eq!(code(&egk(&["generate", "gnp", "5", "1.5"], "")), 1);
    assert_eq!(code(&egk(&["generate", "bubble", "nope"], "")), 1);
    assert_eq!(code(&egk(&["--help"], "")), 0);
}
