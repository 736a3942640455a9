use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn pfaff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfaff")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

const SKEW4: &str = "4\n0 1 2 3\n-1 0 4 5\n-2 -4 0 6\n-3 -5 -6 0\n";

#[test]
fn pf_every_algorithm() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "skew.txt", SKEW4);
    for algo in ["matchings", "recursive", "elimination"] {
        let out = pfaff(&["pf", arg(&m), "--algo", algo]);
        assert!(out.status.success(), "{algo}: {}", stderr(&out));
        assert_eq!(stdout(&out).trim(), "8", "{algo}");
    }
}

#[test]
fn pf_rational_entries() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "half.txt", "2\n0 1/2\n-1/2 0\n");
    let out = pfaff(&["pf", arg(&m)]);
    assert_eq!(stdout(&out).trim(), "1/2");
}

#[test]
fn pf_of_empty_matrix_is_one() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "empty.txt", "0\n");
    let out = pfaff(&["pf", arg(&m)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn pf_rejects_odd_dimension() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "odd.txt", "3\n0 1 2\n-1 0 3\n-2 -3 0\n");
    let out = pfaff(&["pf", arg(&m)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("odd dimension 3"), "{}", stderr(&out));
}

#[test]
fn pf_names_the_offending_pair() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "bad.txt", "2\n0 1\n1 0\n");
    let out = pfaff(&["pf", arg(&m)]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("(0,1)") && err.contains("(1,0)"), "{err}");
}

#[test]
fn det_every_algorithm() {
    let dir = TempDir::new().unwrap();
    let small = write(&dir, "small.txt", "2\n1 2\n3 4\n");
    let big = write(&dir, "big.txt", "3\n1 2 3\n4 5 6\n7 8 10\n");
    for algo in ["condense", "elimination", "pf-bridge"] {
        let out = pfaff(&["det", arg(&small), "--algo", algo]);
        assert_eq!(stdout(&out).trim(), "-2", "{algo}");
        let out = pfaff(&["det", arg(&big), "--algo", algo]);
        assert_eq!(stdout(&out).trim(), "-3", "{algo}");
    }
}

#[test]
fn condense_reports_zero_pivot() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "pivot.txt", "3\n1 2 3\n4 0 6\n7 8 9\n");
    let out = pfaff(&["det", arg(&m), "--algo", "condense"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("zero pivot"), "{}", stderr(&out));
    let out = pfaff(&["det", arg(&m)]);
    assert_eq!(stdout(&out).trim(), "60");
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = pfaff(&["pf", "/nonexistent/matrix.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matchings_listing() {
    let out = pfaff(&["matchings", "0 1 2 3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "+ (0 1) (2 3)\n- (0 2) (1 3)\n+ (0 3) (1 2)\n3 matchings\n");
}

#[test]
fn list_shows_registry() {
    let out = pfaff(&["list"]);
    let text = stdout(&out);
    for name in ["tanner", "desnanot", "blaschke", "torelli"] {
        assert!(text.contains(name), "{name} missing from list");
    }
}

#[test]
fn unknown_identity() {
    let out = pfaff(&["verify", "no-such-identity"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("tanner"));
}

#[test]
fn symbolic_bound() {
    let out = pfaff(&["verify-symbolic", "tanner", "--alpha-len", "4", "--beta-len", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("symbolic bound"), "{}", stderr(&out));
    let out = pfaff(&["verify-symbolic", "tanner"]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn verify_writes_report() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("tanner.jsonl");
    let out = pfaff(&["verify", "tanner", "--trials", "12", "--seed", "3", "--report", arg(&report)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = fs::read_to_string(&report).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    for (i, line) in lines.iter().enumerate() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["identity"], "tanner");
        assert_eq!(v["trial"], i as u64);
        assert_eq!(v["ok"], true);
        assert_eq!(v["residual"], "0");
    }
}

#[test]
fn family_params_accept_negatives() {
    let out = pfaff(&["verify", "family", "--trials", "5", "--params", "-1", "0", "1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let out = pfaff(&["verify", "family", "--trials", "5", "--params", "1", "1", "1"]);
    assert_ne!(out.status.code(), Some(0));
}
