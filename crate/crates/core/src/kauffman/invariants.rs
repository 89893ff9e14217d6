use std::fmt;

use crate::bracket::Strategy;
use crate::cyclo::QuotientElement as Q;
use crate::error::Result;
use crate::link::LinkDiagram;

use super::engine::{LambdaEngine, DEFAULT_SKEIN_CAP};
use super::point::EvalPoint;

/// `x` up to multiplication by powers of `a`, stored as the least element
/// of its orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AOrbit {
    canonical: Q,
}

impl AOrbit {
    pub fn new(x: &Q, a: &Q) -> Self {
        let mut best = x.clone();
        let mut y = x * a;
        while y != *x {
            if y < best {
                best = y.clone();
            }
            y = &y * a;
        }
        AOrbit { canonical: best }
    }

    pub fn canonical(&self) -> &Q {
        &self.canonical
    }
}

impl fmt::Display for AOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)
    }
}

/// True iff `x = a^j y` for some `0 <= j < 5`.
pub fn orbit_eq_mod_a(x: &Q, y: &Q, pt: &EvalPoint) -> bool {
    let mut z = y.clone();
    for _ in 0..5 {
        if z == *x {
            return true;
        }
        z = &z * &pt.a;
    }
    false
}

/// The four 5-move invariants coming from the Kauffman polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FInvariantSet {
    pub q1: Q,
    pub q2: Q,
    pub f1: AOrbit,
    pub f2: AOrbit,
}

impl FInvariantSet {
    /// Builds the set from `Λ` values at `q1, q2, f1, f2`.
    pub fn from_values(values: [Q; 4]) -> Self {
        let [q1, q2, f1, f2] = values;
        FInvariantSet {
            q1,
            q2,
            f1: AOrbit::new(&f1, &EvalPoint::f1().a),
            f2: AOrbit::new(&f2, &EvalPoint::f2().a),
        }
    }

    /// `q1 · conj(q1)` as a rational number.
    pub fn q1_norm_squared(&self) -> Option<num_rational::BigRational> {
        (&self.q1 * &self.q1.conj()).as_rational().cloned()
    }
}

/// `Λ` at the four standard points of [`EvalPoint::standard`].
pub fn lambda_values(d: &LinkDiagram, cap: usize, strategy: Strategy) -> Result<[Q; 4]> {
    let points = EvalPoint::standard();
    let eval = |pt: &EvalPoint| LambdaEngine::new(pt, cap).eval(d);
    let values: Vec<Result<Q>> = match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            points.par_iter().map(eval).collect()
        }
        _ => points.iter().map(eval).collect(),
    };
    let mut out = values.into_iter();
    let mut next = || out.next().expect("four values");
    Ok([next()?, next()?, next()?, next()?])
}

pub fn f_invariants(d: &LinkDiagram) -> Result<FInvariantSet> {
    f_invariants_with(d, DEFAULT_SKEIN_CAP)
}

pub fn f_invariants_with(d: &LinkDiagram, cap: usize) -> Result<FInvariantSet> {
    f_invariants_with_strategy(d, cap, Strategy::default())
}

pub fn f_invariants_with_strategy(
    d: &LinkDiagram,
    cap: usize,
    strategy: Strategy,
) -> Result<FInvariantSet> {
    Ok(FInvariantSet::from_values(lambda_values(d, cap, strategy)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_equality() {
        let pt = EvalPoint::f1();
        let k = pt.constants();
        let x = &(&pt.a * &pt.a) * &k.h;
        assert!(orbit_eq_mod_a(&x, &k.h, &pt));
        assert!(!orbit_eq_mod_a(&k.h, &k.t2, &pt));
        assert_eq!(AOrbit::new(&x, &pt.a), AOrbit::new(&k.h, &pt.a));
        let q = EvalPoint::q1();
        assert!(orbit_eq_mod_a(&k.h, &k.h, &q));
        assert!(!orbit_eq_mod_a(&(&k.h * &pt.a), &k.h, &q));
    }

    #[test]
    fn unknot_is_trivial() {
        let f = f_invariants(&LinkDiagram::unknot()).unwrap();
        assert!(f.q1.is_one() && f.q2.is_one());
        assert!(f.f1.canonical().is_one() || AOrbit::new(&Q::one(), &EvalPoint::f1().a) == f.f1);
    }
}
