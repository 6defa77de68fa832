use std::io::Write;
use std::process::{Command, Output};

use tempfile::{NamedTempFile, TempDir};

fn maxtrans(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxtrans"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn input(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Drops the `wall_time_ns` field, the only nondeterministic part of a record.
fn without_timing(s: &str) -> String {
    s.split_whitespace()
        .filter(|f| !f.starts_with("wall_time_ns="))
        .collect::<Vec<_>>()
        .join(" ")
}

const PATH3: &str = "3 2\n1 2\n2 3\n";
const CYCLE3: &str = "3 3\n1 2\n2 3\n3 1\n";

#[test]
fn maximal_path_with_verify() {
    let f = input(PATH3);
    let o = maxtrans(&[
        "maximal",
        "--algorithm",
        "v2",
        "--verify",
        "--input",
        path(&f),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3 1\n1 2\n");
    let report = stderr(&o);
    for check in ["transitive", "subrelation", "maximal"] {
        assert!(report.contains(&format!("check.{check}=pass")), "{report}");
    }
}

#[test]
fn maximal_keeps_transitive_input_and_format() {
    let f = input("011\n001\n000\n");
    for alg in ["v1", "v2"] {
        let o = maxtrans(&["maximal", "--algorithm", alg, "--input", path(&f)]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "011\n001\n000\n");
    }
}

#[test]
fn maximal_on_empty_relation() {
    let f = input("4 0\n");
    let o = maxtrans(&["maximal", "--input", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4 0\n");
}

#[test]
fn output_flag_writes_file() {
    let f = input(PATH3);
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("t.txt");
    let o = maxtrans(&[
        "maximal",
        "--input",
        path(&f),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "3 1\n1 2\n");
}

#[test]
fn maximum_modes_on_cycle() {
    let f = input(CYCLE3);
    let o = maxtrans(&["maximum", "--mode", "exact", "--input", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("result_size=1"));

    let o = maxtrans(&[
        "maximum",
        "--mode",
        "quarter",
        "--verify",
        "--input",
        path(&f),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report = stderr(&o);
    assert!(report.contains("check.quarter_floor=pass"), "{report}");
    assert!(!report.contains("result_size=0"));
}

#[test]
fn dicut_local_on_out_star() {
    let f = input("4 3\n1 2\n1 3\n1 4\n");
    for seed in 0..8 {
        let s = seed.to_string();
        let o = maxtrans(&[
            "maximum",
            "--mode",
            "dicut-local",
            "--seed",
            &s,
            "--input",
            path(&f),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(
            stderr(&o).contains("result_size=3"),
            "seed {seed}: {}",
            stderr(&o)
        );
    }
}

#[test]
fn budget_exceeded_status() {
    let arcs: String = (1..=5)
        .flat_map(|i| {
            (1..=5)
                .filter(move |&j| j != i)
                .map(move |j| format!("{i} {j}\n"))
        })
        .collect();
    let f = input(&format!("5 20\n{arcs}"));
    let o = maxtrans(&[
        "maximum",
        "--mode",
        "exact",
        "--budget",
        "10",
        "--input",
        path(&f),
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("10"));
}

#[test]
fn encode_examples() {
    let f = input("2 1\n1 2\n");
    let o = maxtrans(&["encode", "--input", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("p cnf 1 0\n"), "{text}");

    let f = input(PATH3);
    let text = stdout(&maxtrans(&["encode", "--input", path(&f)]));
    assert!(text.contains("p cnf 2 1\n"), "{text}");
    let clauses: Vec<&str> = text
        .lines()
        .skip_while(|l| !l.starts_with("p "))
        .skip(1)
        .collect();
    assert_eq!(clauses.len(), 1);

    let f = input("3 0\n");
    let text = stdout(&maxtrans(&["encode", "--input", path(&f)]));
    assert_eq!(text, "p cnf 0 0\n");

    let f = input("3 3\n1 2\n2 3\n1 3\n");
    let a = stdout(&maxtrans(&["encode", "--input", path(&f)]));
    let b = stdout(&maxtrans(&["encode", "--input", path(&f)]));
    assert_eq!(a, b);
    assert!(a.contains("p cnf 3 1\n"), "{a}");
}

#[test]
fn closure_and_check() {
    let f = input(PATH3);
    let o = maxtrans(&["closure", "--input", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3 3\n1 2\n1 3\n2 3\n");

    let o = maxtrans(&["check", "--input", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("transitive=false") && text.contains("path_length_two=true"),
        "{text}"
    );
}

#[test]
fn experiment_small_and_deterministic() {
    let args = [
        "experiment",
        "--n",
        "4",
        "--m",
        "4",
        "--trials",
        "1",
        "--seed",
        "7",
    ];
    let a = maxtrans(&args);
    assert_eq!(a.status.code(), Some(0));
    let text = stdout(&a);
    let trial: Vec<&str> = text.lines().filter(|l| l.starts_with("seed=")).collect();
    assert_eq!(trial.len(), 1);
    let max_dicut: usize = trial[0]
        .split_whitespace()
        .find_map(|f| f.strip_prefix("max_dicut="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(max_dicut >= 1);
    assert_eq!(a.stdout, maxtrans(&args).stdout);
}

#[test]
fn experiment_rejects_zero_trials() {
    let o = maxtrans(&["experiment", "--n", "4", "--m", "4", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_single_row() {
    let o = maxtrans(&["bench", "--sizes", "100", "--repetitions", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("n=100 m=400 "), "{text}");
    assert!(text.contains("v1_doubling=-"));
}

#[test]
fn json_reports() {
    let f = input(PATH3);
    let o = maxtrans(&["maximal", "--json", "--verify", "--input", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stderr(&o)).unwrap();
    for key in ["command", "n", "m", "result_size", "checks", "wall_time_ns"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["result_size"], 1);

    let o = maxtrans(&[
        "experiment",
        "--json",
        "--n",
        "4",
        "--m",
        "4",
        "--trials",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);

    let o = maxtrans(&["bench", "--json", "--sizes", "50,100", "--repetitions", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn reports_are_stable_apart_from_timing() {
    let f = input(CYCLE3);
    let args = [
        "maximum",
        "--mode",
        "dicut-local",
        "--seed",
        "5",
        "--input",
        path(&f),
    ];
    let (a, b) = (maxtrans(&args), maxtrans(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(without_timing(&stderr(&a)), without_timing(&stderr(&b)));
}

#[test]
fn error_statuses() {
    let o = maxtrans(&["maximal", "--input", "/nonexistent/relation.txt"]);
    assert_eq!(o.status.code(), Some(1));

    let f = input("3 1\n1 9\n");
    let o = maxtrans(&["maximal", "--input", path(&f)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    assert_eq!(maxtrans(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(maxtrans(&["maximal"]).status.code(), Some(2));
}
