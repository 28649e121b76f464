use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hookcontent"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts_lines() {
    assert_eq!(stdout(&run(&["enumerate", "2,1", "H", "2"], "")).lines().count(), 11);
    assert_eq!(stdout(&run(&["enumerate", "1", "C", "2"], "")).lines().count(), 0);
    assert_eq!(stdout(&run(&["enumerate", "5,5,4,2", "N", "2"], "")).lines().count(), 256);
}

#[test]
fn forward_then_inverse_reproduces_the_enumeration() {
    for shape in ["5,5,4,2", "3,3,2,1,1", "4,1,1"] {
        let h = stdout(&run(&["enumerate", shape, "H", "2"], ""));
        let mapped = run(&["map", "--no-class"], &h);
        assert!(mapped.status.success());
        let back = run(&["map", "--inverse", "--no-class"], &stdout(&mapped));
        assert_eq!(stdout(&back), h, "{shape}");

        let mut targets = stdout(&run(&["enumerate", shape, "N", "2"], ""));
        targets += &stdout(&run(&["enumerate", shape, "C", "2"], ""));
        let pulled = run(&["map", "--inverse", "--no-class"], &targets);
        let pushed = run(&["map", "--no-class"], &stdout(&pulled));
        assert_eq!(stdout(&pushed), targets, "{shape}");
    }
}

#[test]
fn map_annotates_classes_by_default() {
    let line = r#"{"kind":"H","partition":[5,5,4,2],"star":[1,3],"labels":[[1,4],[3,3]]}"#;
    let out = run(&["map"], line);
    assert_eq!(
        stdout(&out).trim_end(),
        r#"{"kind":"N","partition":[5,5,4,2],"labels":[[1,4],[3,3]],"class":"N1"}"#
    );
}

#[test]
fn malformed_lines_are_reported_with_line_numbers() {
    let input = "{\"kind\":\"H\",\"partition\":[1],\"star\":[1,1],\"labels\":[[1,1],[1,1]]}\n{oops\n";
    let out = run(&["map"], input);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out).lines().count(), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn verify_smallest_case() {
    let out = run(&["verify", "--max-n", "1", "--json", "--quiet"], "");
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["partitions_checked"], 1);
    assert_eq!(report["failures"], serde_json::json!([]));
    assert!(out.stderr.is_empty());
}

#[test]
fn verify_flags_and_exit_codes() {
    let out = run(&["verify", "--max-n", "8", "--k", "1", "--k", "2,3", "--checks", "bijection,rects", "--jobs", "2"], "");
    assert!(out.status.success());
    assert!(!out.stderr.is_empty(), "progress goes to stderr");
    assert!(stdout(&out).contains("checks:     bijection,rects"));
    assert_eq!(run(&["verify", "--max-n", "0"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "3", "--checks", "nope"], "").status.code(), Some(2));
    let mutated = run(&["verify", "--max-n", "8", "--quiet", "--mutant", "phi2-row"], "");
    assert_eq!(mutated.status.code(), Some(1));
}

#[test]
fn rects_reports_all_routes() {
    let out = run(&["rects", "2,2"], "");
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["brute"], serde_json::json!({"total": 9, "thin": 8, "thick": 1}));
    assert_eq!(value["consistent"], true);
    assert_eq!(run(&["rects", "2,3"], "").status.code(), Some(2));
}

#[test]
fn render_draws_markers() {
    let line = r#"{"kind":"H","partition":[5,5,4,2],"star":[1,3],"labels":[[1,4],[3,3]]}"#;
    let out = run(&["render", line], "");
    assert_eq!(stdout(&out), ". . * 1 .\n. . . . .\n. . 2 .\n. .\n");
    let n = r#"{"kind":"N","partition":[5,5,4,2],"labels":[[2,2],[2,2]]}"#;
    let out = run(&["render"], n);
    assert_eq!(stdout(&out).lines().nth(1), Some(".  12 .  .  ."));
}
