use crate::cyclo::{
    doteq_canonical, eval_at_root, to_quotient, DoteqClass, HalfLaurent, UnitOrbitValue,
};
use crate::error::{Error, Result};
use crate::link::{LinkDiagram, Orientation};

use super::state_sum::{kauffman_bracket_with, Strategy, DEFAULT_BRACKET_CAP};

/// The 5-move invariants carried by the Jones polynomial.
#[derive(Clone, Debug)]
pub struct JonesInvariants {
    pub jones: HalfLaurent,
    pub vbar: DoteqClass,
    pub gamma1: UnitOrbitValue,
    pub gamma3: UnitOrbitValue,
    pub v1: f64,
    pub v3: f64,
    pub det: u64,
}

/// `V(t) = (-A^3)^(-w) <D>` at `A = t^(-1/4)`.
pub fn jones(d: &LinkDiagram, o: &Orientation) -> Result<HalfLaurent> {
    jones_with(d, o, DEFAULT_BRACKET_CAP, Strategy::default())
}

pub fn jones_with(
    d: &LinkDiagram,
    o: &Orientation,
    cap: usize,
    strategy: Strategy,
) -> Result<HalfLaurent> {
    let bracket = kauffman_bracket_with(d, cap, strategy)?.poly;
    let w = d.writhe(o);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let mut v = HalfLaurent::zero();
    for (k, c) in bracket.terms() {
        // (-1)^w A^(k - 3w) = (-1)^w s^((3w - k)/2)
        let e = 3 * w - k;
        if e % 2 != 0 {
            return Err(Error::Consistency(format!(
                "odd quarter power A^{k} with writhe {w}"
            )));
        }
        v.add_term(e / 2, sign * c);
    }
    Ok(v)
}

/// Jones polynomial for the default orientation.
pub fn jones_default(d: &LinkDiagram) -> Result<HalfLaurent> {
    jones(d, &d.default_orientation())
}

/// `|V(-1)|`, exact. Fails if `V(-1)` is not a rational or purely
/// imaginary integer.
pub fn determinant(v: &HalfLaurent) -> Result<u64> {
    let (re, im) = v.eval_at_s_i();
    if re != 0 && im != 0 {
        return Err(Error::Consistency(format!(
            "V(-1) = {re} + {im}i is not real or imaginary"
        )));
    }
    u64::try_from(re.abs() + im.abs())
        .map_err(|_| Error::Consistency("determinant overflow".into()))
}

pub fn invariants_of_polynomial(v: HalfLaurent) -> Result<JonesInvariants> {
    let x = to_quotient(&v);
    let g1 = eval_at_root(&v, 1)?;
    let g3 = eval_at_root(&v, 3)?;
    let gamma1 = UnitOrbitValue::new(g1);
    let gamma3 = UnitOrbitValue::new(g3);
    Ok(JonesInvariants {
        det: determinant(&v)?,
        vbar: doteq_canonical(&x),
        v1: gamma1.norm(),
        v3: gamma3.norm(),
        gamma1,
        gamma3,
        jones: v,
    })
}

pub fn jones_invariants(d: &LinkDiagram) -> Result<JonesInvariants> {
    jones_invariants_with(d, DEFAULT_BRACKET_CAP, Strategy::default())
}

pub fn jones_invariants_with(
    d: &LinkDiagram,
    cap: usize,
    strategy: Strategy,
) -> Result<JonesInvariants> {
    let v = jones_with(d, &d.default_orientation(), cap, strategy)?;
    invariants_of_polynomial(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LinkDiagram {
        LinkDiagram::new(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], 0).unwrap()
    }

    #[test]
    fn trefoil_polynomial() {
        let v = jones_default(&trefoil()).unwrap();
        assert_eq!(v, HalfLaurent::from_t_terms(&[(1, 1), (3, 1), (4, -1)]));
        let m = jones_default(&trefoil().mirror()).unwrap();
        assert_eq!(m, v.invert_variable());
        assert_eq!(determinant(&v).unwrap(), 3);
    }

    #[test]
    fn unknot_and_unlink() {
        let u = jones_invariants(&LinkDiagram::unknot()).unwrap();
        assert_eq!(u.det, 1);
        assert!((u.v1 - 1.0).abs() < 1e-12 && (u.v3 - 1.0).abs() < 1e-12);
        let l = jones_invariants(&LinkDiagram::unlink(2)).unwrap();
        assert!((l.v1 - 1.9021130325903).abs() < 1e-9);
        assert_eq!(l.det, 0);
    }

    #[test]
    fn orientation_changes_only_a_unit() {
        let hopf = crate::link::Tangle::integer(2).numerator();
        let o = hopf.default_orientation();
        let v = jones(&hopf, &o).unwrap();
        let r = hopf.reverse_component(&o, 0);
        let w = jones(&hopf, &r).unwrap();
        assert_ne!(v, w);
        assert_eq!(
            doteq_canonical(&to_quotient(&v)),
            doteq_canonical(&to_quotient(&w))
        );
        assert_eq!(determinant(&v).unwrap(), 2);
    }
}
