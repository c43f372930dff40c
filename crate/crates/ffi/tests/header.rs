use std::path::PathBuf;
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let text = std::fs::read_to_string(crate_dir().join("include/pack2dom.h"))
        .expect("build script writes the header");
    assert!(text.contains("#pragma once"));
    assert!(
        text.contains("typedef struct P2dGraph P2dGraph;"),
        "handle must stay opaque"
    );
    for name in [
        "p2d_last_error",
        "p2d_graph_from_graph6",
        "p2d_graph_from_edges",
        "p2d_graph_free",
        "p2d_graph_order",
        "p2d_graph_size",
        "p2d_gamma",
        "p2d_beta",
        "p2d_alpha",
        "p2d_nu2",
        "p2d_generate_family",
        "p2d_recognize",
        "p2d_graph_to_graph6",
        "p2d_canonical_form",
        "p2d_survey_builtin",
        "p2d_string_free",
        "P2D_STATUS_OK = 0",
        "P2D_STATUS_BOUND_EXCEEDED",
        "P2D_REJECT_NO_LEAF_LEG",
    ] {
        assert!(text.contains(name), "missing {name}");
    }
}

/// Builds the static library into a private target directory; the outer
/// cargo invocation holds the lock on the shared one.
fn static_library() -> Option<PathBuf> {
    let target = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-static");
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
    let status = Command::new(cargo)
        .args([
            "build",
            "--quiet",
            "-p",
            "pack2dom-ffi",
            "--lib",
            "--target-dir",
        ])
        .arg(&target)
        .current_dir(crate_dir())
        .status()
        .ok()?;
    assert!(status.success(), "static library build failed");
    Some(target.join("debug").join("libpack2dom_ffi.a")).filter(|p| p.exists())
}

#[test]
fn c_program_links_against_the_static_library() {
    let Some(lib) = static_library() else {
        eprintln!("static library unavailable; skipping");
        return;
    };
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("p2d_smoke");
    let compiled = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status();
    let Ok(status) = compiled else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(status.success(), "C smoke program failed to build");
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8(run.stdout).unwrap(), "4 5 G?`@?{\n");
}
