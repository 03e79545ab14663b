use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use evenhole_ffi::*;
use serde_json::Value;

fn cycle(n: usize) -> *mut EhGraph {
    let edges: Vec<usize> = (0..n).flat_map(|v| [v, (v + 1) % n]).collect();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { eh_graph_new(n, edges.as_ptr(), n, &mut g) }, EhStatus::Ok);
    g
}

fn take_json(s: *mut std::ffi::c_char) -> Value {
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { eh_string_free(s) };
    v
}

fn last_error() -> String {
    let p = eh_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn recognize_and_color_c7() {
    let g = cycle(7);
    assert_eq!(unsafe { eh_graph_vertex_count(g) }, 7);
    assert_eq!(unsafe { eh_graph_edge_count(g) }, 7);
    let mut in_class = false;
    assert_eq!(unsafe { eh_recognize(g, &mut in_class) }, EhStatus::Ok);
    assert!(in_class);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { eh_recognize_json(g, &mut out) }, EhStatus::Ok);
    assert_eq!(take_json(out)["verdict"], "in_class_with_c7");

    let mut colors = [0usize; 7];
    let mut k = 0;
    assert_eq!(unsafe { eh_color(g, colors.as_mut_ptr(), &mut k) }, EhStatus::Ok);
    assert_eq!(k, 3);
    for v in 0..7 {
        assert_ne!(colors[v], colors[(v + 1) % 7]);
    }

    assert_eq!(unsafe { eh_cwd_json(g, &mut out) }, EhStatus::Ok);
    let cwd = take_json(out);
    assert_eq!(cwd["round_trip"], true);
    assert!(cwd["width"].as_u64().unwrap() <= 10);
    unsafe { eh_graph_free(g) };
}

#[test]
fn refusals_and_errors() {
    let g = cycle(4);
    let mut colors = [0usize; 4];
    let mut k = 0;
    assert_eq!(unsafe { eh_color(g, colors.as_mut_ptr(), &mut k) }, EhStatus::NotInClass);
    assert!(!last_error().is_empty());
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { eh_color_json(g, &mut out) }, EhStatus::NotInClass);
    assert!(take_json(out)["refused"].is_object());
    assert_eq!(unsafe { eh_cwd_json(g, &mut out) }, EhStatus::NotInClass);
    assert!(take_json(out)["refused"].is_object());
    unsafe { eh_graph_free(g) };

    let mut h = ptr::null_mut();
    let bad = CString::new("p edge 3 1\ne 1 9\n").unwrap();
    assert_eq!(unsafe { eh_graph_from_dimacs(bad.as_ptr(), &mut h) }, EhStatus::Parse);
    assert!(last_error().contains("line 2"), "{}", last_error());
    assert!(h.is_null());

    let loops = [0usize, 0];
    assert_eq!(unsafe { eh_graph_new(2, loops.as_ptr(), 1, &mut h) }, EhStatus::InvalidGraph);
    assert_eq!(unsafe { eh_graph_new(2, ptr::null(), 1, &mut h) }, EhStatus::NullPointer);
    assert_eq!(unsafe { eh_recognize(ptr::null(), &mut false) }, EhStatus::NullPointer);
    assert_eq!(unsafe { eh_graph_vertex_count(ptr::null()) }, 0);
    unsafe { eh_graph_free(ptr::null_mut()) };
    unsafe { eh_string_free(ptr::null_mut()) };

    let json = CString::new(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
    assert_eq!(unsafe { eh_graph_from_edge_json(json.as_ptr(), &mut h) }, EhStatus::Ok);
    assert!(eh_last_error().is_null());
    assert_eq!(unsafe { eh_graph_edge_count(h) }, 2);
    unsafe { eh_graph_free(h) };
}

#[test]
fn header_matches_exports() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/evenhole.h")).unwrap();
    for name in [
        "eh_graph_new",
        "eh_graph_from_dimacs",
        "eh_graph_from_edge_json",
        "eh_graph_free",
        "eh_recognize_json",
        "eh_color_json",
        "eh_cwd_json",
        "eh_string_free",
        "eh_last_error",
        "typedef struct EhGraph EhGraph",
        "EH_STATUS_NOT_IN_CLASS = 5",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let v = unsafe { CStr::from_ptr(eh_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "evenhole.h"

int main(void) {
    size_t edges[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 0};
    EhGraph *g = NULL;
    if (eh_graph_new(7, edges, 7, &g) != EH_STATUS_OK) return 1;
    bool in_class = false;
    if (eh_recognize(g, &in_class) != EH_STATUS_OK || !in_class) return 2;
    size_t colors[7];
    size_t k = 0;
    if (eh_color(g, colors, &k) != EH_STATUS_OK || k != 3) return 3;
    char *json = NULL;
    if (eh_cwd_json(g, &json) != EH_STATUS_OK) return 4;
    puts(json);
    eh_string_free(json);
    eh_graph_free(g);
    return 0;
}
"#;

/// Compiles a C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let profile_dir: PathBuf = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().into();
    let lib = profile_dir.join("libevenhole_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let exe = dir.path().join("smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-I")
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["round_trip"], true);
}
