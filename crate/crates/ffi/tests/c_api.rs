use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use chromq_ffi::*;

fn poset(m: &str) -> *mut ChromqPoset {
    let m = CString::new(m).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { chromq_poset_new(m.as_ptr(), &mut out) }, ChromqStatus::Ok);
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    let e = chromq_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_string()
}

#[test]
fn height_and_size() {
    let p = poset("2,4,5,5,5");
    let (mut h, mut n) = (0usize, 0usize);
    unsafe {
        assert_eq!(chromq_poset_height(p, &mut h), ChromqStatus::Ok);
        assert_eq!(chromq_poset_size(p, &mut n), ChromqStatus::Ok);
        chromq_poset_free(p);
    }
    assert_eq!((h, n), (2, 5));
}

#[test]
fn invalid_sequence_reports_error() {
    let m = CString::new("3,2,3").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { chromq_poset_new(m.as_ptr(), &mut out) }, ChromqStatus::InvalidInput);
    assert!(out.is_null());
    assert!(!last_error().is_empty());
}

#[test]
fn null_arguments() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { chromq_poset_new(ptr::null(), &mut out) }, ChromqStatus::NullPointer);
    assert_eq!(unsafe { chromq_poset_height(ptr::null(), &mut 0) }, ChromqStatus::NullPointer);
    unsafe {
        chromq_poset_free(ptr::null_mut());
        chromq_string_free(ptr::null_mut());
    }
}

#[test]
fn running_example_classes() {
    let p = poset("2,3,3");
    let mu = CString::new("1,1,2").unwrap();
    let (mut heaps, mut classes) = (0usize, 0usize);
    assert_eq!(unsafe { chromq_classes_count(p, mu.as_ptr(), &mut heaps, &mut classes) }, ChromqStatus::Ok);
    assert_eq!((heaps, classes), (6, 4));
    unsafe { chromq_poset_free(p) };
}

#[test]
fn expand_json_matches_library() {
    let p = poset("2,3,3");
    let mu = CString::new("1,1,2").unwrap();
    let basis = CString::new("f").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { chromq_expand_json(p, mu.as_ptr(), basis.as_ptr(), &mut out) }, ChromqStatus::Ok);
    let json = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
    unsafe {
        chromq_string_free(out);
        chromq_poset_free(p);
    }
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let row = v["terms"].as_array().unwrap().iter().find(|t| t["partition"] == serde_json::json!([3, 1])).unwrap();
    assert_eq!(row["poly"], serde_json::json!([1, 3, 3, 1]));
}

#[test]
fn wrong_type_length_and_oversize() {
    let p = poset("2,3,3");
    let basis = CString::new("e").unwrap();
    let mut out = ptr::null_mut();
    let short = CString::new("1,1").unwrap();
    assert_eq!(unsafe { chromq_expand_json(p, short.as_ptr(), basis.as_ptr(), &mut out) }, ChromqStatus::InvalidInput);
    let big = CString::new("4,4,4").unwrap();
    assert_eq!(unsafe { chromq_expand_json(p, big.as_ptr(), basis.as_ptr(), &mut out) }, ChromqStatus::TooLarge);
    assert!(last_error().contains("12"));
    assert!(out.is_null());
    unsafe { chromq_poset_free(p) };
}

#[test]
fn header_declares_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/chromq.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "chromq_poset_new",
        "chromq_poset_free",
        "chromq_poset_size",
        "chromq_poset_height",
        "chromq_expand_json",
        "chromq_classes_count",
        "chromq_string_free",
        "chromq_last_error",
        "CHROMQ_STATUS_DISAGREEMENT",
    ] {
        assert!(text.contains(f), "{f} missing from header");
    }
    // Syntax-check the header with a C compiler when one is installed.
    if let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-x", "c"]).arg(&header).status() {
        assert!(status.success());
    }
}

/// Build and run `c/smoke.c` against the static library when a C compiler
/// and the archive are both available.
#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let archive = profile_dir.join("libchromq_ffi.a");
    if !archive.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no archive at {} or no C compiler", archive.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
