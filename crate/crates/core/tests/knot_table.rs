use std::path::PathBuf;

use fivemove_core::bracket::{determinant, jones_default};
use fivemove_core::cyclo::HalfLaurent;
use fivemove_core::link::{parse_dt_table, DTCode};

fn data(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

fn table() -> Vec<DTCode> {
    parse_dt_table(&data("knots10n.dt")).unwrap()
}

fn oracle() -> Vec<(String, u64, HalfLaurent)> {
    data("knots10n_jones.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            let name = it.next().unwrap().to_string();
            let det = it.next().unwrap().parse().unwrap();
            let terms: Vec<(i32, i64)> = it
                .map(|t| {
                    let (e, c) = t.split_once(':').unwrap();
                    (e.parse().unwrap(), c.parse().unwrap())
                })
                .collect();
            (name, det, HalfLaurent::from_t_terms(&terms))
        })
        .collect()
}

#[test]
fn table_has_42_knots() {
    let t = table();
    assert_eq!(t.len(), 42);
    assert_eq!(t[0].name, "10_124");
    assert_eq!(t[41].name, "10_165");
}

#[test]
fn jones_polynomials_match_the_reference_table() {
    for (code, (name, det, v)) in table().iter().zip(oracle()) {
        assert_eq!(code.name, name);
        let d = code.to_diagram().unwrap();
        assert_eq!(d.num_crossings(), 10);
        let w = jones_default(&d).unwrap();
        assert!(w == v || w == v.invert_variable(), "{name}: {w} vs {v}");
        assert_eq!(determinant(&w).unwrap(), det, "{name}");
    }
}
