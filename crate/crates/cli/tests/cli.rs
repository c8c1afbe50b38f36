use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use vdsplit_core::text::{parse_any, parse_complex, parse_graph, parse_ideal, Parsed};

fn vdsplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vdsplit")).args(args).env_remove("VDSPLIT_FIELD").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn cover_ideal_of_p4_by_recursion() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p4.g", "n 4\n0 1\n1 2\n2 3\n");
    let out = vdsplit(&["betti", "--graph", s(&g), "--ideal", "cover", "--mode", "recursive", "--format", "flat"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 2 3\n1 3 2\n");
}

#[test]
fn oracle_table_of_a_path_ideal() {
    let dir = TempDir::new().unwrap();
    let i = write(&dir, "i.txt", "x*y\ny*z\n");
    let out = vdsplit(&["betti", "--ideal", s(&i), "--mode", "oracle", "--format", "flat"]);
    assert_eq!(stdout(&out), "0 2 2\n1 3 1\n");
    let grid = stdout(&vdsplit(&["betti", s(&i)]));
    assert!(grid.contains("   0 |  2"), "{grid}");
}

#[test]
fn zero_ideal_gives_an_empty_table() {
    let dir = TempDir::new().unwrap();
    let i = write(&dir, "zero.txt", "kind: ideal\n0\n");
    let out = vdsplit(&["betti", "--ideal", s(&i), "--format", "flat"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
}

#[test]
fn check_mode_runs_every_applicable_mode() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.g", "kind: graph\nn 4\n0 1\n1 2\n2 3\n0 3\n");
    let out = vdsplit(&["betti", s(&g), "--check", "--format", "flat"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("0 2 4\n1 3 4\n2 4 1\n"), "{text}");
    for mode in ["oracle", "recursive", "sets"] {
        assert!(text.contains(&format!("check {mode}: agrees")), "{text}");
    }
}

#[test]
fn recursive_mode_refuses_non_splittable_input() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c4.g", "kind: graph\nn 4\n0 1\n1 2\n2 3\n0 3\n");
    let out = vdsplit(&["betti", s(&c), "--ideal", "cover", "--mode", "recursive"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not vertex splittable"));
}

#[test]
fn classify_examples() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.txt", "kind: complex\na,b\nc,d\n");
    assert!(stdout(&vdsplit(&["classify", s(&c)])).contains("vertex decomposable: no\n"));

    let i = write(&dir, "i.txt", "kind: ideal\ny\nx*z\n");
    let text = stdout(&vdsplit(&["classify", s(&i)]));
    assert!(text.contains("vertex splittable: yes\nsplit certificate: (y: 1 | x*z)\n"), "{text}");

    let g = write(&dir, "c4.g", "kind: graph\nn 4\n0 1\n1 2\n2 3\n0 3\n");
    let text = stdout(&vdsplit(&["classify", s(&g)]));
    assert!(text.contains("chordal: no\n"), "{text}");
    assert!(text.contains("complement chordal: yes"), "{text}");
    assert!(text.contains("equivalences agree: yes"), "{text}");
}

#[test]
fn classify_refuses_oversized_input() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "big.g", "kind: graph\nn 20\n0 1\n");
    let out = vdsplit(&["classify", s(&g), "--max-n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the cap"));
}

#[test]
fn verify_examples_pass() {
    for (suite, n) in [("duality", "5"), ("pd-bight", "5"), ("froberg", "6")] {
        let out = vdsplit(&["verify", suite, "--max-n", n]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(stdout(&out).starts_with(&format!("suite {suite}: PASS\n")));
    }
}

#[test]
fn verify_reports_are_reproducible() {
    let args = ["verify", "all", "--max-n", "4", "--samples", "40", "--seed", "5"];
    assert_eq!(vdsplit(&args).stdout, vdsplit(&args).stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(vdsplit(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(vdsplit(&["--field", "p=9", "verify", "duality"]).status.code(), Some(2));
    assert_eq!(vdsplit(&["betti"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.g", "kind: graph\nn 3\n0 0\n");
    let out = vdsplit(&["classify", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn field_can_come_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let i = write(&dir, "i.txt", "x*y\ny*z\n");
    let out = Command::new(env!("CARGO_BIN_EXE_vdsplit"))
        .args(["betti", s(&i), "--format", "flat"])
        .env("VDSPLIT_FIELD", "p=2")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "0 2 2\n1 3 1\n");
}

#[test]
fn generated_splittable_ideal_round_trips_with_its_tree() {
    let args = ["gen", "splittable-ideal", "--vars", "6", "--depth", "4", "--seed", "7"];
    let text = stdout(&vdsplit(&args));
    assert_eq!(text, stdout(&vdsplit(&args)));
    let parsed = parse_ideal(&text).unwrap();
    assert!(matches!(parse_any(&text).unwrap(), Parsed::Ideal(_)));
    assert!(text.lines().any(|l| l.starts_with("# split tree: (")), "{text}");

    let dir = TempDir::new().unwrap();
    let path = write(&dir, "ideal.txt", &text);
    let report = stdout(&vdsplit(&["classify", s(&path)]));
    assert!(report.contains("vertex splittable: yes"), "{report}");
    let check = vdsplit(&["betti", s(&path), "--check"]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(parsed.names.len(), 6);
}

#[test]
fn generated_graph_and_complex_round_trip() {
    let dir = TempDir::new().unwrap();
    let g_path = dir.path().join("g.txt");
    let out = vdsplit(&["gen", "graph", "--n", "6", "--p", "0.4", "--seed", "1", "--out", s(&g_path)]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&g_path).unwrap();
    let g = parse_graph(&text).unwrap();
    assert_eq!(g.num_vertices(), 6);
    assert_eq!(vdsplit_core::text::format_graph(&g), text);

    let args = ["gen", "complex", "--n", "5", "--facets", "4", "--seed", "2"];
    let text = stdout(&vdsplit(&args));
    assert_eq!(text, stdout(&vdsplit(&args)));
    let c = parse_complex(&text).unwrap();
    assert_eq!(vdsplit_core::text::format_complex(&c.complex, &c.names), text);
}

#[test]
fn invalid_generator_parameters_are_rejected() {
    assert_eq!(vdsplit(&["gen", "graph", "--p", "1.5"]).status.code(), Some(2));
    assert_eq!(vdsplit(&["gen", "complex", "--facets", "0"]).status.code(), Some(2));
    assert_eq!(vdsplit(&["gen", "splittable-ideal", "--vars", "0"]).status.code(), Some(2));
}
