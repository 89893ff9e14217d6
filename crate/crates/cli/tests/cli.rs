use std::path::PathBuf;
use std::process::{Command, Output};

fn table() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/knots10n.dt")
}

fn golden() -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/probe_table.golden");
    std::fs::read_to_string(p).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fivemove"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// The golden table read column by column.
fn golden_lines() -> Vec<String> {
    let g = golden();
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for row in g.lines() {
        let (a, b) = row.split_at(row.len().min(36));
        left.push(a.trim_end().to_string());
        if !b.trim().is_empty() {
            right.push(b.trim().to_string());
        }
    }
    left.extend(right);
    left
}

#[test]
fn probe_prints_one_line_per_knot() {
    let o = run(&["probe", table().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let got: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(got, golden_lines());
}

#[test]
fn probe_two_columns_is_the_golden_table() {
    let o = run(&["probe", table().to_str().unwrap(), "--columns", "2"]);
    assert_eq!(stdout(&o), golden());
}

#[test]
fn probe_sequential_agrees() {
    let a = run(&["probe", table().to_str().unwrap()]);
    let b = run(&["--sequential", "probe", table().to_str().unwrap()]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn probe_refine_and_tsv() {
    let o = run(&[
        "probe",
        table().to_str().unwrap(),
        "--refine",
        "--format",
        "tsv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("10_155\t\t\t\truled_out"));
    assert!(text.contains("10_161\t\t\t\truled_out"));
    assert!(text.contains("10_136\t2\t1\t2\tjones+kauffman\n10_137"));
    for row in text.lines() {
        assert_eq!(row.split('\t').count(), 5, "{row}");
    }
}

#[test]
fn small_commands() {
    assert_eq!(stdout(&run(&["classify", "M(1/2,1/2,1/2;1)"])), "form 5\n");
    assert_eq!(stdout(&run(&["reduce-tangle", "7/1"])), "2\n");
    let j = stdout(&run(&["jones", "M(-3)"]));
    assert!(j.starts_with("V = t + t^3 - t^4\ndet = 3\n"), "{j}");
    let k = stdout(&run(&["kauffman", "2"]));
    assert!(k.contains("|q1|^2 = "), "{k}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "M(1/2"]).status.code(), Some(1));
    assert_eq!(
        run(&["probe", "/nonexistent/table.dt"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["jones", "M(1/3,1/3,1/3)", "--max-crossings", "4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
