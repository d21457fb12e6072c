//! End-to-end checks of the command-line interface, driving the built
//! binary on the shipped fixture files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../bmrs/fixtures")
        .join(name)
}

fn bmrs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmrs"))
        .args(args)
        .env_remove("BMRS_MAX_LEN")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).to_string()
}

#[test]
fn run_prints_the_transduction() {
    let file = fixture("sec4_789.bmrs");
    let out = bmrs(&["run", file.to_str().unwrap(), "--input", "aaaa"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "789789789789");
}

#[test]
fn run_accepts_the_empty_input() {
    let file = fixture("sec4_789.bmrs");
    let out = bmrs(&["run", file.to_str().unwrap(), "--input", ""]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "");
}

#[test]
fn run_on_the_divergent_fixture_exits_one_and_names_the_pair() {
    let file = fixture("diverge.bmrs");
    let start = std::time::Instant::now();
    let out = bmrs(&["run", file.to_str().unwrap(), "--input", "a"]);
    assert!(start.elapsed().as_secs() < 1, "divergence detection must not hang");
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains('f') && err.contains('0'), "witness missing: {err}");
}

#[test]
fn eval_reports_values() {
    let file = fixture("sec4_789.bmrs");
    let out = bmrs(&[
        "eval",
        file.to_str().unwrap(),
        "--input",
        "aaaa",
        "--index",
        "0",
        "--term",
        "a(S(x))",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "tt");
}

#[test]
fn check_reports_pass_for_the_worked_fixture() {
    let file = fixture("sec4_789.bmrs");
    let out = bmrs(&["check", file.to_str().unwrap(), "--max-len", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("well-defined: pass"), "{text}");
    assert!(text.contains("strict: pass"), "{text}");
    assert!(text.contains("bound=4"), "{text}");
}

#[test]
fn check_reports_the_nonstrict_fixture() {
    let file = fixture("nonstrict_erase.bmrs");
    let out = bmrs(&["check", file.to_str().unwrap(), "--max-len", "3"]);
    assert!(out.status.success(), "well-defined programs check clean");
    let text = stdout(&out);
    assert!(text.contains("well_defined=pass"), "{text}");
    assert!(text.contains("strict=counterexample"), "{text}");
}

#[test]
fn verify_runs_a_suite_and_reports_key_values() {
    let out = bmrs(&["verify", "scanner-oracle", "--max-len", "4"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("suite=scanner-oracle"), "{text}");
    assert!(text.contains("outcome=pass"), "{text}");
    assert!(text.contains("cases="), "{text}");
}

#[test]
fn verify_unknown_suite_exits_two() {
    let out = bmrs(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn print_is_canonical_and_stable() {
    let file = fixture("sec53_rho.bmrs");
    let once = bmrs(&["print", file.to_str().unwrap()]);
    assert!(once.status.success());
    let dir = tempfile::tempdir().unwrap();
    let reprinted_path = dir.path().join("canon.bmrs");
    std::fs::write(&reprinted_path, stdout(&once)).unwrap();
    let twice = bmrs(&["print", reprinted_path.to_str().unwrap()]);
    assert!(twice.status.success());
    assert_eq!(stdout(&once), stdout(&twice));
}

#[test]
fn compose_writes_a_program_equal_to_the_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("gh.bmrs");
    let compose = bmrs(&[
        "compose",
        fixture("elgot_left.bmrs").to_str().unwrap(),
        fixture("elgot_right.bmrs").to_str().unwrap(),
        "--max-len",
        "4",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(compose.status.success(), "{}", stderr(&compose));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("generated by: bmrs compose"), "{text}");
    assert!(text.contains("bound: 4"), "{text}");

    // Composed program against the two-stage pipeline on a few inputs.
    for input in ["", "a", "ab", "aba", "bbaa", "ababa"] {
        let direct = bmrs(&["run", out_path.to_str().unwrap(), "--input", input]);
        assert!(direct.status.success(), "{}", stderr(&direct));
        let inner = bmrs(&[
            "run",
            fixture("elgot_right.bmrs").to_str().unwrap(),
            "--input",
            input,
        ]);
        let mid = stdout(&inner).trim().to_string();
        let outer = bmrs(&[
            "run",
            fixture("elgot_left.bmrs").to_str().unwrap(),
            "--input",
            &mid,
        ]);
        assert_eq!(stdout(&direct).trim(), stdout(&outer).trim(), "on {input:?}");
    }
}

#[test]
fn strictify_output_reparses_and_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("strict.bmrs");
    let out = bmrs(&[
        "strictify",
        fixture("nonstrict_erase.bmrs").to_str().unwrap(),
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let run = bmrs(&["run", out_path.to_str().unwrap(), "--input", "ab"]);
    assert_eq!(stdout(&run).trim(), "_a");
}

#[test]
fn blank_enrich_refuses_nonstrict_programs() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("enriched.bmrs");
    let out = bmrs(&[
        "blank-enrich",
        fixture("sec6_pad_a.bmrs").to_str().unwrap(),
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));

    // The non-strict fixture must be refused with exit 1. Its output
    // alphabet is blankless, which is also refused; strictify first,
    // then break strictness by hand is covered in library tests, so
    // here the blankless refusal suffices as the CLI-visible error.
    let bad = bmrs(&[
        "blank-enrich",
        fixture("nonstrict_erase.bmrs").to_str().unwrap(),
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad_path = dir.path().join("bad.bmrs");
    std::fs::write(&bad_path, "alphabet = {a}").unwrap();
    let out = bmrs(&["print", bad_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error"), "{}", stderr(&out));
}

#[test]
fn env_var_sets_the_default_bound() {
    let out = Command::new(env!("CARGO_BIN_EXE_bmrs"))
        .args(["verify", "scanner-oracle"])
        .env("BMRS_MAX_LEN", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("bound=2"), "{}", stdout(&out));
}
