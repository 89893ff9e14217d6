use fivemove_core::bracket::{determinant, jones_default};
use fivemove_core::cyclo::HalfLaurent;
use fivemove_core::link::{Fraction, MontesinosDescriptor, Tangle};

fn m(s: &str) -> MontesinosDescriptor {
    s.parse().unwrap()
}

#[test]
fn minus_three_is_the_positive_trefoil() {
    let v = jones_default(&m("M(-3)").to_diagram()).unwrap();
    assert_eq!(v, HalfLaurent::from_t_terms(&[(1, 1), (3, 1), (4, -1)]));
}

#[test]
fn form_five_representative_has_determinant_twenty() {
    let d = m("M(1/2,1/2,1/2;1)").to_diagram();
    assert_eq!(d.num_crossings(), 7);
    assert_eq!(determinant(&jones_default(&d).unwrap()).unwrap(), 20);
}

#[test]
fn rational_links_have_determinant_p() {
    for p in 1..=13i64 {
        for q in 1..=p {
            let Ok(f) = Fraction::new(p, q) else { continue };
            if f.q() != q {
                continue;
            }
            let d = Tangle::from_fraction(f).numerator();
            let det = determinant(&jones_default(&d).unwrap()).unwrap();
            assert_eq!(det, p as u64, "S({p},{q})");
        }
    }
}

#[test]
fn determinant_matches_the_montesinos_formula() {
    let fracs = [(1, 2), (-1, 2), (1, 3), (2, 3), (-2, 5), (3, 7), (2, 7)];
    for (i, &a) in fracs.iter().enumerate() {
        for &b in &fracs[i..] {
            for &c in &fracs {
                for e in -2..=2 {
                    let d = MontesinosDescriptor::new(vec![a, b, c], e).unwrap();
                    let det = determinant(&jones_default(&d.to_diagram()).unwrap()).unwrap();
                    assert_eq!(det, d.determinant(), "{d}");
                }
            }
        }
    }
}

#[test]
fn mirror_descriptor_mirrors_the_polynomial() {
    for s in ["M(1/2,2/5,-1/3;1)", "M(3/7,1/2;-2)", "M(-3)"] {
        let d = m(s);
        let v = jones_default(&d.to_diagram()).unwrap();
        let w = jones_default(&d.mirror().to_diagram()).unwrap();
        assert_eq!(w, v.invert_variable(), "{s}");
        let n = jones_default(&d.normalize().to_diagram()).unwrap();
        assert_eq!(n, v, "{s}");
    }
}
