#![allow(dead_code)]

use std::path::PathBuf;

use fivemove_core::link::{parse_dt_table, DTCode, LinkDiagram, MontesinosDescriptor};
use proptest::prelude::*;

pub fn data(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

pub fn knot_table() -> Vec<DTCode> {
    parse_dt_table(&data("knots10n.dt")).unwrap()
}

pub const SMALL_FRACTIONS: [(i64, i64); 10] = [
    (1, 2),
    (-1, 2),
    (1, 3),
    (-1, 3),
    (2, 3),
    (2, 5),
    (-2, 5),
    (1, 4),
    (3, 4),
    (-3, 5),
];

/// Montesinos diagrams with at most `max_factors` small factors, either
/// chirality.
pub fn small_montesinos(max_factors: usize) -> impl Strategy<Value = LinkDiagram> {
    (
        prop::collection::vec(0..SMALL_FRACTIONS.len(), 1..=max_factors),
        -2i64..=2,
        any::<bool>(),
    )
        .prop_map(|(idx, e, mirror)| {
            let factors = idx.iter().map(|&i| SMALL_FRACTIONS[i]).collect();
            let d = MontesinosDescriptor::new(factors, e).unwrap().to_diagram();
            if mirror {
                d.mirror()
            } else {
                d
            }
        })
}

/// Two directed edges of one face on different arcs, picked by three
/// indices, for tangle insertion.
pub fn face_pair(d: &LinkDiagram, face: usize, i: usize, j: usize) -> Option<(usize, usize)> {
    let faces = d.faces();
    if faces.is_empty() {
        return None;
    }
    let f = &faces[face % faces.len()];
    if f.len() < 2 {
        return None;
    }
    let a = i % f.len();
    let b = (a + 1 + j % (f.len() - 1)) % f.len();
    let partners = d.partners().unwrap();
    let (h1, h2) = (f[a], f[b]);
    (h1 != h2 && partners[h1] != h2).then_some((h1, h2))
}
