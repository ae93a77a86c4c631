//! End-to-end tests of the `lawcos` binary: exit codes, file outputs,
//! option handling.

use std::path::PathBuf;
use std::process::{Command, Output};

fn lawcos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lawcos"))
        .args(args)
        .env("LAWCOS_NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("lawcos-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn verify_accepts_the_desk_triangles() {
    for points in ["0,1 0,0 1,0", "1,3 0,0 5,0", "1,0 1/2,2 0,0", "2,1 0,0 1,0"] {
        let out = lawcos(&["verify", "--points", points]);
        assert_eq!(exit_code(&out), 0, "{points}: {}", stdout(&out));
        assert!(stdout(&out).contains("PASS"));
    }
}

#[test]
fn malformed_and_collinear_inputs_exit_2() {
    for points in ["1,3 0,0", "a,b c,d e,f", "1,1 2,2 3,3", ""] {
        let out = lawcos(&["verify", "--points", points]);
        assert_eq!(exit_code(&out), 2, "{points:?}");
    }
    // Missing both input forms is a usage error.
    let out = lawcos(&["verify"]);
    assert_eq!(exit_code(&out), 2);
    // So is providing both.
    let out = lawcos(&["verify", "--points", "0,1 0,0 1,0", "--sides", "3", "4", "5"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn sides_input_places_and_reports() {
    let out = lawcos(&["verify", "--sides", "3", "4", "5"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("realized exactly"));

    let out = lawcos(&["verify", "--sides", "2", "2", "2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("irrational"), "{text}");
    assert!(text.contains("PASS"), "perturbed instance still verifies: {text}");

    let out = lawcos(&["verify", "--sides", "1", "1", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn include_filters_check_families() {
    let report = temp_path("include.json");
    let out = lawcos(&[
        "verify",
        "--points",
        "1,3 0,0 5,0",
        "--include",
        "euclid",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let json = std::fs::read_to_string(&report).unwrap();
    std::fs::remove_file(&report).ok();
    assert!(json.contains("euclid.red.at_B.area"));
    assert!(!json.contains("parallelogram."));
    assert!(!json.contains("disjoint."));
    // Core families always run.
    assert!(json.contains("chain.L1"));
    assert!(json.contains("pair.blue.congruent"));
}

#[test]
fn report_and_svg_files_are_written() {
    let report = temp_path("t3.json");
    let svg = temp_path("t3.svg");
    let out = lawcos(&[
        "verify",
        "--points",
        "1,0 1/2,2 0,0",
        "--report",
        report.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let json = std::fs::read_to_string(&report).unwrap();
    let image = std::fs::read_to_string(&svg).unwrap();
    std::fs::remove_file(&report).ok();
    std::fs::remove_file(&svg).ok();
    assert!(json.ends_with('\n'));
    assert!(json.contains("\"all_pass\":true"));
    assert!(image.starts_with("<svg "));
    assert!(image.contains("hatch-green"), "negative far pieces hatched");
}

#[test]
fn show_none_draws_only_the_triangle() {
    let svg = temp_path("bare.svg");
    let out = lawcos(&[
        "verify",
        "--points",
        "1,3 0,0 5,0",
        "--svg",
        svg.to_str().unwrap(),
        "--show",
        "none",
    ]);
    assert_eq!(exit_code(&out), 0);
    let image = std::fs::read_to_string(&svg).unwrap();
    std::fs::remove_file(&svg).ok();
    assert_eq!(image.matches("<polygon").count(), 1);
}

#[test]
fn bad_svg_options_exit_2() {
    let svg = temp_path("bad.svg");
    let out = lawcos(&[
        "verify",
        "--points",
        "1,3 0,0 5,0",
        "--svg",
        svg.to_str().unwrap(),
        "--padding",
        "0.7",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(!svg.exists());
}

#[test]
fn batch_argument_validation() {
    assert_eq!(exit_code(&lawcos(&["batch", "--count", "0", "--seed", "1", "--bound", "10"])), 2);
    assert_eq!(exit_code(&lawcos(&["batch", "--count", "5", "--seed", "1", "--bound", "1"])), 2);
    assert_eq!(exit_code(&lawcos(&["batch", "--count", "5", "--seed", "1"])), 2);
}

#[test]
fn small_batch_passes_and_writes_summary() {
    let report = temp_path("batch.json");
    let out = lawcos(&[
        "batch",
        "--count",
        "40",
        "--seed",
        "7",
        "--bound",
        "12",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let json = std::fs::read_to_string(&report).unwrap();
    std::fs::remove_file(&report).ok();
    assert!(json.contains("\"count\":40"));
    assert!(json.contains("\"failures\":[]"));
    assert!(json.contains("\"all_pass\":true"));
}

#[test]
fn no_color_env_strips_ansi() {
    let out = lawcos(&["verify", "--points", "1,3 0,0 5,0"]);
    assert!(!stdout(&out).contains('\x1b'));
}
