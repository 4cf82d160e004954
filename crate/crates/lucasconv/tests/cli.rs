//! End-to-end checks on the compiled binary: exit codes, determinism and
//! output shapes of each subcommand.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lucasconv"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn seq_prints_fibonacci() {
    let out = run(&["seq", "--nmax", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("55"), "{text}");
}

#[test]
fn triangle_text_and_json() {
    let out = run(&["triangle", "a", "--max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("154112"));

    let out = run(&["triangle", "b", "--max", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kind"], "b");
    assert_eq!(v["rows"][5][1], "496");
}

#[test]
fn conv_methods_agree() {
    let series = run(&["conv", "--d", "3", "--nmax", "12", "--method", "series"]);
    let brute = run(&["conv", "--d", "3", "--nmax", "12", "--method", "enum"]);
    assert_eq!(series.status.code(), Some(0));
    assert_eq!(brute.status.code(), Some(0));
    assert_eq!(stdout(&series), stdout(&brute));
}

#[test]
fn derive_formats() {
    let text = run(&["derive", "--D", "2"]);
    assert_eq!(text.status.code(), Some(0));

    let latex = run(&["derive", "--D", "2", "--format", "latex"]);
    assert_eq!(latex.status.code(), Some(0));
    assert!(stdout(&latex).contains("\\frac"));

    let json = run(&["derive", "--D", "3", "--format", "json"]);
    assert_eq!(json.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["D"], 3);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);

    let fib = run(&["derive", "--D", "2", "--fib-basis"]);
    assert_eq!(fib.status.code(), Some(0));
    assert!(stdout(&fib).contains("F_n"));
}

#[test]
fn derive_is_deterministic() {
    let a = stdout(&run(&["derive", "--D", "5", "--format", "json"]));
    let b = stdout(&run(&["derive", "--D", "5", "--format", "json"]));
    assert_eq!(a, b);
}

#[test]
fn verify_passes_and_reports() {
    let out = run(&["verify", "--D", "3", "--p", "2", "--q", "-1", "--nmax", "25"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn check_proposition_default_matrix() {
    let out = run(&["check-proposition", "--dmax", "3", "--N", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("overall: PASS"));
}

#[test]
fn degenerate_parameters_exit_3() {
    // p = 2, q = 1 gives U_n = n: discriminant zero
    let out = run(&["derive", "--D", "2", "--p", "2", "--q", "1", "--numeric"]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["verify", "--D", "2", "--p", "2", "--q", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["seq", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["triangle", "c"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("lucasconv-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("triangle.json");
    let out = run(&[
        "triangle",
        "a",
        "--max",
        "4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["kind"], "a");
    std::fs::remove_file(&path).ok();
}

#[test]
fn bench_emits_csv() {
    let out = run(&["bench", "--D", "3", "--nmax", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("method,D,n,nanoseconds,value-digits"));
    assert!(text.lines().any(|l| l.starts_with("closed-form,3,8,")));
}
