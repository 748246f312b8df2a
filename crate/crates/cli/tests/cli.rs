use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn seidel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seidel"))
        .args(args)
        .output()
        .expect("spawn seidel")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn paley_file(dir: &TempDir, prime: u64) -> PathBuf {
    let out = dir.path().join(format!("paley{prime}.txt"));
    let o = seidel(&["paley", "--prime", &prime.to_string(), "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    out
}

#[test]
fn paley_writes_validated_matrix() {
    let dir = TempDir::new().unwrap();
    let out = paley_file(&dir, 5);
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text, "6\n0+++++\n+0+--+\n++0+--\n+-+0+-\n+--+0+\n++--+0\n");
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn paley_rejects_bad_primes() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("x.txt");
    let o = seidel(&["paley", "--prime", "7", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("skew-symmetric"));
    let o = seidel(&["paley", "--prime", "4", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not prime"));
    assert!(!out.exists());
}

#[test]
fn paley_reports_io_failure() {
    let o = seidel(&["paley", "--prime", "5", "--out", "/nonexistent-dir/p.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn spectrum_outputs() {
    let dir = TempDir::new().unwrap();
    let p6 = paley_file(&dir, 5);
    let o = seidel(&["spectrum", "--in", s(&p6), "--certify-conference"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("symmetric: true"));
    assert!(out.contains("certified conference spectrum: true"));
    assert!(out.contains("determinant: -125"));

    let p3 = write(&dir, "p3.txt", "3\n0-+\n-0-\n+-0\n");
    let o = seidel(&["spectrum", "--in", s(&p3)]);
    assert!(stdout(&o).contains("symmetric: false"));
    assert!(!stdout(&o).contains("certified"));

    let two = write(&dir, "two.txt", "2\n0+\n+0\n");
    let o = seidel(&["spectrum", "--in", s(&two)]);
    assert!(stdout(&o).contains("charpoly: -1 0 1\n"));
}

#[test]
fn spectrum_parse_error_names_location() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "2\n0+\n-0\n");
    let o = seidel(&["spectrum", "--in", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("(0,1)"), "{}", stderr(&o));
    let o = seidel(&["spectrum", "--in", s(&dir.path().join("missing.txt"))]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn equiv_exit_codes() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", "3\n0-+\n-0-\n+-0\n");
    // switch vertex 0
    let b = write(&dir, "b.txt", "3\n0+-\n+0-\n--0\n");
    let o = seidel(&["equiv", "--a", s(&a), "--b", s(&b)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "equivalent\n");

    let empty = write(&dir, "empty.txt", "3\n0++\n+0+\n++0\n");
    let triangle = write(&dir, "tri.txt", "3\n0--\n-0-\n--0\n");
    let o = seidel(&["equiv", "--a", s(&empty), "--b", s(&triangle)]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "not equivalent\n");

    let two = write(&dir, "two.txt", "2\n0+\n+0\n");
    let o = seidel(&["equiv", "--a", s(&two), "--b", s(&empty)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn explore_summaries() {
    let dir = TempDir::new().unwrap();
    let p6 = paley_file(&dir, 5);
    let csv = dir.path().join("r.csv");
    let o = seidel(&["explore", "--in", s(&p6), "--k", "5", "--out", s(&csv)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("6/6 symmetric"));
    let body = std::fs::read_to_string(&csv).unwrap();
    assert!(body.starts_with("indices,k,symmetric,charpoly,canonical_key\n"));
    assert_eq!(body.lines().count(), 7);

    let o = seidel(&["explore", "--in", s(&p6), "--k", "3", "--out", s(&csv)]);
    assert!(stdout(&o).contains("0/20 symmetric"));

    let p30 = paley_file(&dir, 29);
    let o = seidel(&["explore", "--in", s(&p30), "--k", "29", "--out", s(&csv)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("30/30 symmetric"));
}

#[test]
fn explore_input_validation() {
    let dir = TempDir::new().unwrap();
    let p6 = paley_file(&dir, 5);
    let csv = dir.path().join("r.csv");

    let o = seidel(&[
        "explore",
        "--in",
        s(&p6),
        "--k",
        "3",
        "--cap",
        "10",
        "--out",
        s(&csv),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("C(6,3) = 20"));
    let o = seidel(&[
        "explore",
        "--in",
        s(&p6),
        "--k",
        "3",
        "--cap",
        "10",
        "--force",
        "--out",
        s(&csv),
    ]);
    assert_eq!(o.status.code(), Some(0));

    let o = seidel(&["explore", "--in", s(&p6), "--k", "7", "--out", s(&csv)]);
    assert_eq!(o.status.code(), Some(2));

    let plain = write(&dir, "plain.txt", "3\n0++\n+0+\n++0\n");
    let o = seidel(&["explore", "--in", s(&plain), "--k", "2", "--out", s(&csv)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("[0][1]"), "{}", stderr(&o));
    let o = seidel(&[
        "explore",
        "--in",
        s(&plain),
        "--k",
        "2",
        "--allow-noncc",
        "--out",
        s(&csv),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3/3 symmetric"));
}

#[test]
fn explore_sampling_and_dedupe() {
    let dir = TempDir::new().unwrap();
    let p14 = paley_file(&dir, 13);
    let csv = dir.path().join("r.csv");
    let o = seidel(&[
        "explore",
        "--in",
        s(&p14),
        "--k",
        "6",
        "--sample",
        "30",
        "--seed",
        "4",
        "--dedupe",
        "--out",
        s(&csv),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("examined: 30"));
    let body = std::fs::read_to_string(&csv).unwrap();
    for line in body.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 5);
        assert_eq!(fields[1], "6");
        assert!(fields[4].starts_with("6:"));
    }
    // --sample without --seed is a usage error
    let o = seidel(&[
        "explore",
        "--in",
        s(&p14),
        "--k",
        "6",
        "--sample",
        "30",
        "--out",
        s(&csv),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_table() {
    let dir = TempDir::new().unwrap();
    let p6 = paley_file(&dir, 5);
    let o = seidel(&["classify", "--in", s(&p6)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 7);
    assert!(rows[1].starts_with("1\t6\t6\t0\t"));
    assert!(rows[3].starts_with("3\t20\t0\t20\t"));
    assert!(rows[5].starts_with("5\t6\t6\t0\t"));
}
