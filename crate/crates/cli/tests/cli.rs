use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn skewgb(problem: &Path, flags: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewgb"))
        .arg(problem)
        .args(flags)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, src: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, src).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn difference_ideal_basis() {
    let o = skewgb(&corpus("difference.gb"), &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "x(2)*x(0) - x(1)\n\
         x(3)^2*x(0) - x(3)\n\
         x(4)*x(1) - x(3)*x(0)\n\
         x(4)*x(3)*x(0) - x(4)\n\
         x(5) - x(4)*x(0)\n"
    );
}

#[test]
fn certify_and_oracle_report() {
    let o = skewgb(&corpus("difference.gb"), &["--certify", "--oracle", "--stats"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("basis_size: 5\n"), "{out}");
    assert!(out.contains("certification: passed ("), "{out}");
    assert!(out.ends_with("oracle lm-ideals match\n"), "{out}");
}

#[test]
fn free_algebra_golden_output() {
    let o = skewgb(&corpus("c41w.gb"), &["--threads", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), include_str!("golden/c41w.out"));
}

#[test]
fn output_is_independent_of_threads() {
    let one = skewgb(&corpus("c41w.gb"), &["--threads", "1", "--stats"]);
    let four = skewgb(&corpus("c41w.gb"), &["--threads", "4", "--stats"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn trace_lines_precede_the_basis() {
    let o = skewgb(&corpus("difference.gb"), &["--trace"]);
    let out = stdout(&o);
    assert!(out.starts_with("trace: "), "{out}");
    assert!(out.ends_with("x(5) - x(4)*x(0)\n"), "{out}");
}

#[test]
fn usage_errors_exit_1() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "no_bound.gb", "mode: sigma\nletters: x\n\nx(1) - x(0)\n");
    let o = skewgb(&p, &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("degree_bound"), "{}", stderr(&o));

    let o = skewgb(&dir.path().join("missing.gb"), &[]);
    assert_eq!(o.status.code(), Some(1));

    let o = Command::new(env!("CARGO_BIN_EXE_skewgb")).arg("--bogus").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "bad.gb", "mode: sigma\nletters: x\ndegree_bound: 3\n\nx(1) - x(0)\nx(1) + z(0)\n");
    let o = skewgb(&p, &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 6, column 8"), "{}", stderr(&o));
}

#[test]
fn refusals_exit_2() {
    let dir = TempDir::new().unwrap();
    let unit = write(&dir, "unit.gb", "mode: sigma\nletters: x\ndegree_bound: 2\n\nx(0) - 1\nx(0)\n");
    let o = skewgb(&unit, &[]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    assert!(stderr(&o).contains("constant"), "{}", stderr(&o));

    write(&dir, "flagged.tbl", "x(0) -> x(1)\nx(1) -> x(1)\n");
    let flagged = write(
        &dir,
        "flagged.gb",
        "mode: sigma\nletters: x\nendo: table:flagged.tbl\ndegree_bound: 3\n\nx(0)\n",
    );
    let o = skewgb(&flagged, &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("common factor"), "{}", stderr(&o));

    let free = write(&dir, "free.gb", "mode: free\ndegree_bound: 3\n\nx1*x2 - x2\n");
    let o = skewgb(&free, &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not homogeneous"), "{}", stderr(&o));
}

#[test]
fn free_modes_agree() {
    let dir = TempDir::new().unwrap();
    let body = "letters: x, y\ndegree_bound: 4\n\ny*x - x*y\n";
    let a = skewgb(&write(&dir, "a.gb", &format!("mode: free\n{body}")), &["--certify"]);
    let b = skewgb(&write(&dir, "b.gb", &format!("mode: free2\n{body}")), &["--certify"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(stdout(&a), "x*y - y*x\ncertification: passed (1 pairs)\n");
    assert_eq!(a.stdout, b.stdout);
}
