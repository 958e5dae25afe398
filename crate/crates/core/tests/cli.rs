use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use chromq::chromatic::ExpansionReport;
use chromq::symfunc::Partition;
use chromq::QPoly;

fn chromq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromq")).args(args).env_remove("CHROMQ_OUT_DIR").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = chromq(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compare against a golden file; `UPDATE_GOLDEN=1` rewrites it instead.
fn assert_golden(name: &str, args: &[&str]) {
    let got = stdout(args);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(golden(name), &got).unwrap();
    }
    let want = std::fs::read_to_string(golden(name)).unwrap();
    assert_eq!(got, want, "output of {args:?} differs from {name}");
}

#[test]
fn golden_outputs() {
    assert_golden(
        "expand_233_112_f.json",
        &["expand", "--poset", "2,3,3", "--mu", "1,1,2", "--basis", "f", "--format", "json"],
    );
    assert_golden(
        "expand_233_112_m.json",
        &["expand", "--poset", "2,3,3", "--mu", "1,1,2", "--basis", "m", "--format", "json"],
    );
    assert_golden(
        "expand_233_112_p.csv",
        &["expand", "--poset", "2,3,3", "--mu", "1,1,2", "--basis", "p", "--format", "csv"],
    );
    assert_golden("expand_23455_e.txt", &["expand", "--poset", "2,3,4,5,5", "--basis", "e"]);
    assert_golden("classes_233_112.txt", &["classes", "--poset", "2,3,3", "--mu", "1,1,2"]);
    assert_golden("classes_233_112.json", &["classes", "--poset", "2,3,3", "--mu", "1,1,2", "--format", "json"]);
    assert_golden("classes_23455.txt", &["classes", "--poset", "2,3,4,5,5"]);
    assert_golden("verify_hp_233.txt", &["verify", "--suite", "hp-recurrence", "--poset", "2,3,3"]);
}

#[test]
fn documented_examples() {
    let f: ExpansionReport = serde_json::from_str(&stdout(&[
        "expand", "--poset", "2,3,3", "--mu", "1,1,2", "--basis", "f", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(f.int_coeff(&"3,1".parse().unwrap()), Some(QPoly::from_i64(&[1, 3, 3, 1])));

    let e: ExpansionReport =
        serde_json::from_str(&stdout(&["expand", "--poset", "1,2,3", "--basis", "e", "--format", "json"])).unwrap();
    assert_eq!(e.int_coeff(&Partition::column(3)), Some(QPoly::one()));

    let e: ExpansionReport =
        serde_json::from_str(&stdout(&["expand", "--poset", "2,3,4,5,5", "--basis", "e", "--format", "json"])).unwrap();
    assert_eq!(e.int_coeff(&"2,2,1".parse().unwrap()), Some(QPoly::from_i64(&[0, 0, 1])));

    assert!(stdout(&["classes", "--poset", "2,3,3", "--mu", "1,1,2"]).starts_with("words=12 heaps=6 classes=4\n"));
    assert!(stdout(&["classes", "--poset", "1,2", "--mu", "1,1"]).starts_with("words=2 heaps=1 classes=1\n"));
    assert!(stdout(&["verify", "--suite", "oracle", "--poset", "2,4,4,4", "--mu", "1,1,1,1"]).contains("0 failed"));
}

#[test]
fn report_json_round_trips() {
    for basis in ["m", "e", "h", "p", "s", "f"] {
        let text = stdout(&["expand", "--poset", "2,3,4,4", "--mu", "1,2,1,1", "--basis", basis, "--format", "json"]);
        let report: ExpansionReport = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
    }
}

#[test]
fn deterministic_output() {
    let args = ["classes", "--poset", "2,3,4,5,5", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["expand", "--poset", "2,3,4,5,6,6", "--basis", "s", "--format", "csv"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| chromq(args).status.code();
    assert_eq!(code(&["expand", "--poset", "3,2,3"]), Some(1));
    assert_eq!(code(&["expand", "--poset", "2,3,3", "--mu", "1,1"]), Some(1));
    assert_eq!(code(&["verify", "--suite", "bogus"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["expand", "--poset", "2,3,3", "--basis", "e", "--format", "svg"]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
    let big = chromq(&["classes", "--poset", "2,3,3", "--mu", "4,4,4"]);
    assert_eq!(big.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&big.stderr).contains("--max-degree"));
    assert_eq!(code(&["expand", "--poset", "1,2,3", "--basis", "m", "--colors", "4"]), Some(0));
}

#[test]
fn out_dir_and_svg_gallery() {
    let dir = tempfile::tempdir().unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_chromq"))
        .args(["classes", "--poset", "2,3,3", "--mu", "1,1,2", "--svg", "gallery", "--out", "classes.txt"])
        .env("CHROMQ_OUT_DIR", dir.path())
        .status()
        .unwrap();
    assert!(status.success());
    let listing = std::fs::read_to_string(dir.path().join("classes.txt")).unwrap();
    assert!(listing.starts_with("words=12 heaps=6 classes=4"));
    let index = std::fs::read_to_string(dir.path().join("gallery/index.tsv")).unwrap();
    assert_eq!(index.lines().count(), 7);
    let svgs = std::fs::read_dir(dir.path().join("gallery"))
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "svg"));
    assert_eq!(svgs.count(), 6);
    let first = std::fs::read_to_string(dir.path().join("gallery/class1-heap1.svg")).unwrap();
    assert!(first.starts_with("<svg"));
}
