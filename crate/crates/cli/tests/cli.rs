use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn aqg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aqg"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

#[test]
fn derive_prints_the_scaling_constant_of_h4() {
    let o = aqg(&["derive", "--builtin", "h4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.lines().any(|l| l == "τ = -1"), "{s}");
    assert!(s.lines().any(|l| l == "δ = (1)*g"), "{s}");
}

#[test]
fn fourier_of_a_group_element_is_a_point_mass() {
    let o = aqg(&["fourier", "--builtin", "group:z2", "--element", "g"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "ℱ(x) = (1)*f_g"));
}

#[test]
fn fourier_on_taft_from_a_file() {
    let f = data("taft3.toml");
    let o = aqg(&[
        "fourier",
        "--file",
        f.to_str().unwrap(),
        "--element",
        "2*x - 1/3*gx + z3*g2",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn float_backend_agrees_on_h4() {
    let o = aqg(&[
        "check",
        "--builtin",
        "h4",
        "--suite",
        "fourier",
        "--float",
        "--eps",
        "1e-9",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn integer_pair_runs_the_windowed_suites() {
    let o = aqg(&["check", "--builtin", "kz", "--window", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("fourier = not applicable"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| aqg(args).status.code();
    assert_eq!(code(&["check", "--builtin", "nope"]), Some(3));
    assert_eq!(
        code(&["check", "--builtin", "kz", "--suite", "fourier"]),
        Some(3)
    );
    assert_eq!(code(&["derive", "--builtin", "kz"]), Some(3));
    assert_eq!(
        code(&["check", "--builtin", "h4", "--suite", "nope"]),
        Some(2)
    );
    assert_eq!(
        code(&["fourier", "--builtin", "h4", "--element", "2**g"]),
        Some(2)
    );
    assert_eq!(
        code(&["fourier", "--builtin", "h4", "--element", "q"]),
        Some(2)
    );
    assert_eq!(code(&["check"]), Some(2));
    assert_eq!(code(&["check", "--file", "/nonexistent/a.toml"]), Some(2));
    let broken = data("h4_broken.toml");
    assert_eq!(
        code(&["derive", "--file", broken.to_str().unwrap()]),
        Some(3)
    );
}

#[test]
fn failing_check_names_a_witness() {
    let broken = data("h4_broken.toml");
    let o = aqg(&[
        "check",
        "--file",
        broken.to_str().unwrap(),
        "--suite",
        "axioms",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("FAIL ") && l.contains(": ")));
}
