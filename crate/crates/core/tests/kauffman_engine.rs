mod common;

use fivemove_core::classify::{normal_form_f_invariants, NormalForm};
use fivemove_core::kauffman::{
    f1_closed, f2_closed, f_invariants, f_invariants_with, lambda_eval, orbit_eq_mod_a, EvalPoint,
};
use fivemove_core::link::{LinkDiagram, MontesinosDescriptor, Tangle};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn trefoil() -> LinkDiagram {
    LinkDiagram::new(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], 0).unwrap()
}

#[test]
fn skein_constants_are_engine_values() {
    for pt in EvalPoint::standard() {
        let k = pt.constants();
        let lam = |d: &LinkDiagram| lambda_eval(d, &pt).unwrap();
        assert_eq!(lam(&LinkDiagram::unlink(2)), k.t2);
        assert!(orbit_eq_mod_a(
            &lam(&Tangle::integer(2).numerator()),
            &k.h,
            &pt
        ));
        assert!(orbit_eq_mod_a(
            &lam(&Tangle::from_fraction("5/2".parse().unwrap()).numerator()),
            &k.g4,
            &pt
        ));
        assert!(orbit_eq_mod_a(&lam(&trefoil()), &k.g3, &pt));
        assert!(orbit_eq_mod_a(&lam(&trefoil().mirror()), &k.g3, &pt));
    }
}

#[test]
fn closed_forms_match_montesinos_diagrams() {
    let half = |k: usize, l: usize, fifth: bool| {
        let mut f = vec![(1, 2); k];
        f.extend(std::iter::repeat_n(if fifth { (2, 5) } else { (-1, 2) }, l));
        MontesinosDescriptor::new(f, 0).unwrap().to_diagram()
    };
    for pt in EvalPoint::standard() {
        for (k, l) in [(3, 0), (2, 1), (1, 2), (0, 3), (4, 1), (2, 3), (0, 4)] {
            let v = lambda_eval(&half(k, l, false), &pt).unwrap();
            assert!(
                orbit_eq_mod_a(&v, &f1_closed(&pt, k as i64, l as i64).unwrap(), &pt),
                "form 1 ({k}, {l})"
            );
        }
        for (k, l) in [(2, 1), (1, 2), (0, 3), (3, 1), (1, 3)] {
            let v = lambda_eval(&half(k, l, true), &pt).unwrap();
            assert!(
                orbit_eq_mod_a(&v, &f2_closed(&pt, k as i64, l as i64).unwrap(), &pt),
                "form 2 ({k}, {l})"
            );
        }
    }
}

#[test]
fn normal_form_values_match_representatives() {
    for nf in NormalForm::enumerate(4) {
        let rep = nf.representative();
        let from_diagram = f_invariants_with(&rep, 40).unwrap();
        assert_eq!(normal_form_f_invariants(nf).unwrap(), from_diagram, "{nf}");
    }
}

#[test]
fn q1_norm_is_a_power_of_five_on_the_table() {
    for code in common::knot_table() {
        let f = f_invariants(&code.to_diagram().unwrap()).unwrap();
        let n = f
            .q1_norm_squared()
            .expect("q1 times its conjugate is rational");
        assert!(n.is_integer(), "{}", code.name);
        let mut k = n.to_integer();
        while !k.is_zero() && (&k % 5u32).is_zero() {
            k /= 5u32;
        }
        assert_eq!(k, BigInt::one(), "{}", code.name);
    }
}

#[test]
fn cap_is_enforced() {
    let d = MontesinosDescriptor::new(vec![(-5, 7), (2, 7), (3, 5), (1, 4)], -3)
        .unwrap()
        .to_diagram();
    assert!(d.num_crossings() > 14);
    assert!(f_invariants(&d).is_err());
    assert!(f_invariants_with(&d, 40).is_ok());
}
