use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tough-closure"));
    cmd.args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    let mut input = child.stdin.take().unwrap();
    if let Some(s) = stdin {
        input.write_all(s.as_bytes()).unwrap();
    }
    drop(input);
    child.wait_with_output().unwrap()
}

#[test]
fn toughness_of_c5_from_stdin() {
    let out = run(&["toughness"], Some("Dhc\n"));
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1 witness={0, 2}");
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["verify", "--no-such-flag"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    assert!(run(&["--help"], None).status.success());
}

#[test]
fn exhaustive_closure_sweep_round_trips_through_corpus_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bc.jsonl");
    let path = path.to_str().unwrap();
    let out = run(&["verify", "--lemma", "bc", "--exhaustive", "5", "--out", path], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let lines = std::fs::read_to_string(path).unwrap().lines().count();
    assert_eq!(lines, 1024);
    let out = run(&["corpus-check", path], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn identity_counterexamples_exit_two() {
    let out = run(&["verify", "--lemma", "identities", "--random", "5..5", "--count", "500", "--seed", "1"], None);
    assert_eq!(out.status.code(), Some(2));
}
