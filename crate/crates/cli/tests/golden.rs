//! Byte-identical outputs of gen/build/solve in canonical mode, compared
//! against checked-in golden files. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

/// Runs the binary with `args` (input paths relative to tests/inputs) and
/// returns stdout plus the contents of any sidecar written to `sidecar`.
fn run(args: &[&str], sidecar: Option<&Path>) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_domblocker"))
        .current_dir(dir("inputs"))
        .arg("--canonical")
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} exited with {:?}: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    let mut bytes = out.stdout;
    if let Some(p) = sidecar {
        bytes.extend(b"--- sidecar ---\n");
        bytes.extend(fs::read(p).expect("sidecar written"));
    }
    bytes
}

fn golden(name: &str, args: &[&str], with_sidecar: bool) {
    let tmp = tempfile::tempdir().expect("temp dir");
    let side = tmp.path().join("side.json");
    let mut full: Vec<&str> = args.to_vec();
    let side_str = side.to_str().expect("utf-8 path").to_string();
    if with_sidecar {
        full.extend(["--map", side_str.as_str()]);
    }
    let first = run(&full, with_sidecar.then_some(side.as_path()));
    let second = run(&full, with_sidecar.then_some(side.as_path()));
    assert_eq!(first, second, "{name}: repeated runs differ");
    let path = dir("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &first).expect("write golden");
    }
    let expected = fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert!(
        first == expected,
        "{name}: output differs from golden file\n--- got ---\n{}",
        String::from_utf8_lossy(&first)
    );
}

#[test]
fn gen_1in3_dimacs() {
    golden(
        "gen_1in3_n6_seed7.cnf",
        &["gen", "--flavor", "1in3", "-n", "6", "--seed", "7"],
        false,
    );
}

#[test]
fn gen_3sat_json() {
    golden(
        "gen_3sat_n5_m8_seed3.json",
        &[
            "gen",
            "--flavor",
            "3sat",
            "-n",
            "5",
            "--clauses",
            "8",
            "--seed",
            "3",
            "--format",
            "json",
        ],
        false,
    );
}

#[test]
fn build_subcubic_sat_fixture() {
    golden(
        "build_subcubic_sat.json",
        &["build", "--target", "subcubic", "-i", "sat_1in3.cnf"],
        true,
    );
}

#[test]
fn build_clawfree_c5() {
    golden(
        "build_clawfree_c5.json",
        &["build", "--target", "clawfree", "-i", "c5.g6"],
        true,
    );
}

#[test]
fn build_p7free_graph6() {
    golden(
        "build_p7free_single.g6",
        &[
            "build",
            "--target",
            "p7free",
            "-i",
            "single_clause.cnf",
            "--format",
            "graph6",
        ],
        true,
    );
}

#[test]
fn build_subcubic_dot() {
    golden(
        "build_subcubic_unsat.dot",
        &[
            "build",
            "--target",
            "subcubic",
            "-i",
            "unsat_1in3.cnf",
            "--format",
            "dot",
        ],
        false,
    );
}

#[test]
fn solve_c6() {
    golden("solve_c6.json", &["solve", "-i", "c6.g6"], false);
}

#[test]
fn solve_p4() {
    golden("solve_p4.json", &["solve", "-i", "p4.g6"], false);
}

#[test]
fn solve_petersen() {
    golden("solve_petersen.json", &["solve", "-i", "petersen.g6"], false);
}

#[test]
fn solve_edge_list_input() {
    golden(
        "solve_k13_all_efficient.json",
        &["solve", "--what", "all-efficient", "-i", "claw.json"],
        false,
    );
}
