use crate::bracket::{
    v1_closed, v2_closed, v3_closed, v4_closed, v5_closed, JonesInvariants, Strategy,
};
use crate::cyclo::{doteq_canonical, DoteqClass, QuotientElement as Q, UnitOrbitValue};
use crate::error::Result;
use crate::kauffman::{
    f1_closed, f2_closed, f3_closed, lambda_values, AOrbit, EvalPoint, FInvariantSet,
    DEFAULT_SKEIN_CAP,
};

use super::normal_form::NormalForm;

/// Every 5-move invariant of a normal form.
#[derive(Clone, Debug)]
pub struct InvariantTuple {
    pub vbar: DoteqClass,
    pub gamma1: UnitOrbitValue,
    pub gamma3: UnitOrbitValue,
    pub v1: f64,
    pub v3: f64,
    pub det: u64,
    pub f: FInvariantSet,
}

impl InvariantTuple {
    /// `(V̄, γ1, γ3, q1)`, the part used to tell forms apart.
    pub fn separating_key(&self) -> (&DoteqClass, &UnitOrbitValue, &UnitOrbitValue, &Q) {
        (&self.vbar, &self.gamma1, &self.gamma3, &self.f.q1)
    }

    /// Whether the Jones part agrees with invariants computed from a
    /// diagram.
    pub fn jones_agrees(&self, inv: &JonesInvariants) -> bool {
        self.vbar == inv.vbar && self.gamma1 == inv.gamma1 && self.gamma3 == inv.gamma3
    }

    /// Whether the Kauffman part agrees up to powers of `a`.
    pub fn kauffman_agrees(&self, f: &FInvariantSet) -> bool {
        self.f == *f
    }
}

/// The reduced Jones polynomial of a normal form as a field element.
pub fn vbar_closed(nf: NormalForm) -> Q {
    let r = match nf {
        NormalForm::Form1 { k, l } => v1_closed(k.into(), l.into()),
        NormalForm::Form2 { k, l } => v2_closed(k.into(), l.into()),
        NormalForm::Form3 { hopf, trivial } => v3_closed(hopf.into(), trivial.into()),
        NormalForm::Form4 { .. } => Ok(v4_closed()),
        NormalForm::Form5 => Ok(v5_closed()),
    };
    r.expect("normal forms carry valid parameters")
}

/// `Λ` of a normal form at one point, up to powers of `a`.
pub fn f_closed(nf: NormalForm, pt: &EvalPoint) -> Result<Q> {
    match nf {
        NormalForm::Form1 { k, l } => f1_closed(pt, k.into(), l.into()),
        NormalForm::Form2 { k, l } => f2_closed(pt, k.into(), l.into()),
        NormalForm::Form3 { hopf, trivial } => f3_closed(pt, 0, hopf.into(), trivial.into()),
        NormalForm::Form4 {
            fig8,
            hopf,
            trivial,
        } => f3_closed(pt, fig8.into(), hopf.into(), trivial.into()),
        NormalForm::Form5 => {
            let values = lambda_values(
                &nf.representative(),
                DEFAULT_SKEIN_CAP,
                Strategy::Sequential,
            )?;
            let index = EvalPoint::standard()
                .iter()
                .position(|p| p == pt)
                .expect("form 5 is evaluated at the standard points");
            Ok(values[index].clone())
        }
    }
}

pub fn normal_form_f_invariants(nf: NormalForm) -> Result<FInvariantSet> {
    let pts = EvalPoint::standard();
    let [q1, q2, f1, f2] = [0, 1, 2, 3].map(|i| f_closed(nf, &pts[i]));
    Ok(FInvariantSet {
        q1: q1?,
        q2: q2?,
        f1: AOrbit::new(&f1?, &pts[2].a),
        f2: AOrbit::new(&f2?, &pts[3].a),
    })
}

pub fn normal_form_invariants(nf: NormalForm) -> Result<InvariantTuple> {
    let x = vbar_closed(nf);
    let gamma1 = UnitOrbitValue::new(x.galois(1));
    let gamma3 = UnitOrbitValue::new(x.galois(3));
    Ok(InvariantTuple {
        vbar: doteq_canonical(&x),
        v1: gamma1.norm(),
        v3: gamma3.norm(),
        gamma1,
        gamma3,
        det: nf.determinant(),
        f: normal_form_f_invariants(nf)?,
    })
}
