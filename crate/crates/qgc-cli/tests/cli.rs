//! End-to-end tests of the qgc binary: subcommands, exit codes, file outputs,
//! and byte-identical reruns.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_qgc")
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn blocks_d6() {
    let out = run(&["blocks", "--group", "dihedral:6", "--field", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2 block(s)"));
    assert!(text.contains("f0 = 1 + a + a^2"));
    assert!(text.contains("f1 = a + a^2"));
    assert!(text.contains("dim B0 = 2"));
    assert!(text.contains("dim B1 = 4"));
}

#[test]
fn blocks_trivial_group() {
    let out = run(&["blocks", "--group", "cyclic:1", "--field", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1 block(s)"));
}

#[test]
fn blocks_s3c3_dims() {
    let out = run(&[
        "blocks",
        "--group",
        "product:(dihedral:6,cyclic:3)",
        "--field",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["dim B0 = 2", "dim B1 = 4", "dim B2 = 4", "dim B3 = 8"] {
        assert!(text.contains(needle), "missing {:?} in {}", needle, text);
    }
}

#[test]
fn construct_golay_fixture() {
    let dir = tempdir();
    let matrix = dir.join("golay.txt");
    let json = dir.join("golay.json");
    let out = run(&[
        "construct",
        "--config",
        fixture("golay_d6.toml").to_str().unwrap(),
        "--out",
        matrix.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("[24,12,8"), "got: {}", text);
    assert!(text.contains("self-dual: yes"));
    // matrix file exists with the right header; bundle written next to it
    let matrix_text = std::fs::read_to_string(&matrix).unwrap();
    assert!(matrix_text.starts_with("24 12 2\n"));
    assert!(dir.join("golay.bundle.toml").exists());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(parsed["dimension"], 12);
    assert_eq!(parsed["self_dual"], true);

    // byte-identical rerun
    let matrix2 = dir.join("golay2.txt");
    let out2 = run(&[
        "construct",
        "--config",
        fixture("golay_d6.toml").to_str().unwrap(),
        "--out",
        matrix2.to_str().unwrap(),
    ]);
    assert!(out2.status.success());
    assert_eq!(
        std::fs::read(&matrix).unwrap(),
        std::fs::read(&matrix2).unwrap()
    );
    assert_eq!(out.stdout, out2.stdout);
}

#[test]
fn construct_empty_parts_is_zero_code() {
    let dir = tempdir();
    let cfg = dir.join("empty.toml");
    std::fs::write(&cfg, "field = \"2\"\ngroup = \"cyclic:3\"\nindex = 2\n").unwrap();
    let out = run(&["construct", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("[6,0,-]"));
}

#[test]
fn selfdual_nonexistence_verdict() {
    let out = run(&[
        "selfdual", "--field", "3", "--group", "cyclic:3", "--index", "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("none:"), "got: {}", text);
    assert!(text.contains("case (ii)"));
    assert!(text.contains("4 | index"));
}

#[test]
fn selfdual_construction_d6() {
    let dir = tempdir();
    let matrix = dir.join("sd.txt");
    let out = run(&[
        "selfdual",
        "--field",
        "2",
        "--group",
        "dihedral:6",
        "--index",
        "1",
        "--out",
        matrix.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("self-dual [6,3]"));
    assert!(std::fs::read_to_string(&matrix).unwrap().starts_with("6 3 2\n"));
}

#[test]
fn selfdual_doubling_over_gf5() {
    let out = run(&[
        "selfdual", "--field", "5", "--group", "cyclic:1", "--index", "2",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("self-dual [2,1]"));
}

#[test]
fn verify_and_decompose_golay() {
    let dir = tempdir();
    let matrix = dir.join("golay.txt");
    let out = run(&[
        "construct",
        "--config",
        fixture("golay_d6.toml").to_str().unwrap(),
        "--out",
        matrix.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&[
        "verify",
        "--code",
        matrix.to_str().unwrap(),
        "--group",
        "dihedral:6",
        "--index",
        "4",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("module: yes; orbits: 4"));

    // bundle route
    let out = run(&[
        "verify",
        "--bundle",
        dir.join("golay.bundle.toml").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("module: yes"));

    let out = run(&[
        "decompose",
        "--code",
        matrix.to_str().unwrap(),
        "--group",
        "dihedral:6",
        "--index",
        "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("block 0: outer K-dimension 4"), "got {}", text);
    assert!(text.contains("block 1: outer K-dimension 8"));
}

#[test]
fn verify_rejects_non_module_with_exit_3() {
    let dir = tempdir();
    let matrix = dir.join("random.txt");
    std::fs::write(&matrix, "6 2 2\n1 1 0 0 0 0\n0 0 1 0 1 0\n").unwrap();
    let out = run(&[
        "verify",
        "--code",
        matrix.to_str().unwrap(),
        "--group",
        "dihedral:6",
        "--index",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("module: no"));
}

#[test]
fn validation_errors_exit_2() {
    let out = run(&["blocks", "--group", "frobnicate:9", "--field", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["construct", "--config", "/nonexistent/x.toml"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["blocks", "--group", "cyclic:3", "--field", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "qgc-cli-test-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[allow(dead_code)]
fn cleanup(dir: &Path) {
    let _ = std::fs::remove_dir_all(dir);
}
