//! Golden rendering cases shared by the golden and acceptance targets.

use std::path::PathBuf;
use std::process::Command;

pub const CASES: &[(&str, &str)] = &[
    ("qubit_ket.txt", "basis --d 2 --symbolic"),
    ("qubit_ket.tex", "basis --d 2 --symbolic --format latex"),
    ("qubit_projector.txt", "projector --d 2 --symbolic"),
    (
        "qubit_projector.tex",
        "projector --d 2 --symbolic --format latex",
    ),
    ("qubit_basis_0.tex", "basis --d 2 --x 0 --format latex"),
    ("qubit_basis_1.tex", "basis --d 2 --x 1 --format latex"),
    ("qutrit_ket.txt", "basis --d 3 --symbolic"),
    ("qutrit_ket.tex", "basis --d 3 --symbolic --format latex"),
    (
        "qutrit_projector.tex",
        "projector --d 3 --symbolic --format latex",
    ),
    ("qutrit_basis_0.tex", "basis --d 3 --x 0 --format latex"),
    ("qutrit_basis_1.tex", "basis --d 3 --x 1 --format latex"),
    ("qutrit_basis_2.tex", "basis --d 3 --x 2 --format latex"),
    ("qutrit_projector_0.txt", "projector --d 3 --x 0"),
    (
        "qutrit_projector_0.tex",
        "projector --d 3 --x 0 --format latex",
    ),
    (
        "qutrit_projector_1.tex",
        "projector --d 3 --x 1 --format latex",
    ),
    (
        "qutrit_projector_2.tex",
        "projector --d 3 --x 2 --format latex",
    ),
    ("qudit4_ket.txt", "basis --d 4 --symbolic"),
    ("qudit4_ket.tex", "basis --d 4 --symbolic --format latex"),
    (
        "qudit4_projector.tex",
        "projector --d 4 --symbolic --format latex",
    ),
    ("completeness4.tex", "completeness --d 4 --format latex"),
    ("bell_00.txt", "bell --x 0 --y 0"),
    ("bell_01.txt", "bell --x 0 --y 1"),
    ("bell_10.txt", "bell --x 1 --y 0"),
    ("bell_11.txt", "bell --x 1 --y 1"),
    ("bell_00.tex", "bell --x 0 --y 0 --format latex"),
    ("bell_01.tex", "bell --x 0 --y 1 --format latex"),
    ("bell_10.tex", "bell --x 1 --y 0 --format latex"),
    ("bell_11.tex", "bell --x 1 --y 1 --format latex"),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn render(args: &str) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_qudit"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "qudit {args} failed");
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// Files whose contents differ from the current binary output.
#[allow(dead_code)]
pub fn stale_goldens() -> Vec<String> {
    CASES
        .iter()
        .filter(|(file, args)| {
            std::fs::read_to_string(golden_dir().join(file)).ok() != Some(render(args))
        })
        .map(|(file, _)| file.to_string())
        .collect()
}
