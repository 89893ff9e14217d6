use crate::cyclo::QuotientElement as Q;
use crate::error::{Error, Result};

use super::point::{EvalPoint, SkeinConstants};

/// Coefficients of the `1/2` and `2/5` tangles in the Kauffman skein
/// module, over the basis `<0>, <1>, <∞>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleCoefficients {
    pub half: [Q; 3],
    pub two_fifths: [Q; 3],
}

fn det3(m: &[[Q; 3]; 3]) -> Q {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// Solves `m x = v` by Cramer's rule.
fn solve3(m: &[[Q; 3]; 3], v: &[Q; 3]) -> Result<[Q; 3]> {
    let det = det3(m);
    if det.is_zero() {
        return Err(Error::Consistency("singular skein module matrix".into()));
    }
    let inv = det.inverse()?;
    let mut out = [Q::zero(), Q::zero(), Q::zero()];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut mc = m.clone();
        for row in 0..3 {
            mc[row][col] = v[row].clone();
        }
        *slot = &det3(&mc) * &inv;
    }
    Ok(out)
}

/// Closure values of `<0>`, `<1>`, `<∞>` summed with the `0`, `∞` and
/// `-1` tangles.
pub fn closure_matrix(pt: &EvalPoint) -> [[Q; 3]; 3] {
    let k = pt.constants();
    let a = pt.a.clone();
    let a_inv = a.inverse().expect("a is a unit");
    [
        [k.t2.clone(), a.clone(), Q::one()],
        [Q::one(), a_inv.clone(), k.t2.clone()],
        [a_inv, k.t2, a],
    ]
}

/// Solves the skein module system for the `1/2` and `2/5` tangles.
pub fn solve_tangle_coeffs(pt: &EvalPoint) -> Result<TangleCoefficients> {
    let k = pt.constants();
    let a = &pt.a;
    let a_inv = a.inverse()?;
    let a2 = a * a;
    let m = closure_matrix(pt);
    let half = solve3(&m, &[a2.clone(), k.h.clone(), a_inv])?;
    let two_fifths = solve3(&m, &[&a2 * &k.h, k.g4, k.g3])?;
    Ok(TangleCoefficients { half, two_fifths })
}

/// `(za, z, -1)` and `(-a^2+z^2+a^2 z^2+a z^3, -z+z^2/a+z^3, -z/a-z^2)`.
pub fn closed_tangle_coeffs(pt: &EvalPoint) -> TangleCoefficients {
    let (a, z) = (&pt.a, &pt.z);
    let a_inv = a.inverse().expect("a is a unit");
    let a2 = a * a;
    let z2 = z * z;
    let z3 = &z2 * z;
    TangleCoefficients {
        half: [z * a, z.clone(), -Q::one()],
        two_fifths: [
            &(&(&(-&a2) + &z2) + &(&a2 * &z2)) + &(a * &z3),
            &(&(-z) + &(&z2 * &a_inv)) + &z3,
            &(-&(z * &a_inv)) - &z2,
        ],
    }
}

/// Solves the system and checks the result against the closed forms.
pub fn skein_tangle_coeffs(pt: &EvalPoint) -> Result<TangleCoefficients> {
    let solved = solve_tangle_coeffs(pt)?;
    if solved != closed_tangle_coeffs(pt) {
        return Err(Error::Consistency(
            "skein module coefficients disagree with their closed forms".into(),
        ));
    }
    Ok(solved)
}

fn binomial(n: u32, k: u32) -> Q {
    let mut acc: i64 = 1;
    for i in 0..k as i64 {
        acc = acc * (n as i64 - i) / (i + 1);
    }
    Q::from_integer(acc)
}

fn a_pow(a: &Q, k: i64) -> Q {
    a.powi(k).expect("a is a unit")
}

/// Signed residue in `{-2, ..., 2}`.
fn signed_mod5(r: i64) -> i64 {
    (r + 2).rem_euclid(5) - 2
}

fn w1(r: i64, a: &Q, k: &SkeinConstants) -> Q {
    let one = Q::one();
    match signed_mod5(r) {
        0 => &(&k.t2 * &k.t2) - &one,
        e @ (1 | -1) => &k.t2 - &a_pow(a, -2 * e),
        e => &(&a_pow(a, -e) * &(&k.h * &k.t2)) - &a_pow(a, e / 2),
    }
}

fn w2(r: i64, a: &Q, k: &SkeinConstants) -> Q {
    let one = Q::one();
    match signed_mod5(r) {
        0 => &(&k.t2 * &k.t2) - &one,
        e @ (1 | -1) => &(&a_pow(a, e) * &k.t2) - &a_pow(a, -e),
        e => &(&k.h * &k.t2) - &a_pow(a, -e),
    }
}

fn param_error(form: u8, args: &[i64]) -> Error {
    Error::Parameter(format!("form {form} does not allow parameters {args:?}"))
}

fn divide_by_t2(x: Q, k: &SkeinConstants) -> Result<Q> {
    Ok(&x * &k.t2.inverse()?)
}

/// `F` of Form 1 with `k = n`, `l = n'`, up to powers of `a`.
pub fn f1_closed(pt: &EvalPoint, n: i64, n1: i64) -> Result<Q> {
    if n < 0 || !(0..=4).contains(&n1) || n + n1 < 3 {
        return Err(param_error(1, &[n, n1]));
    }
    let k = pt.constants();
    let (a, z) = (&pt.a, &pt.z);
    let (nu, n1u) = (n as u32, n1 as u32);
    let mut sum = Q::zero();
    for j in 0..=nu {
        for j1 in 0..=n1u {
            let c = &binomial(nu, j) * &binomial(n1u, j1);
            sum = &sum + &(&c * &w1(j as i64 - j1 as i64, a, &k));
        }
    }
    let lead = k.h.pow(nu + n1u);
    let rest = &(&a_pow(a, n - n1) * &z.pow(nu + n1u)) * &sum;
    divide_by_t2(&lead + &rest, &k)
}

/// `F` of Form 2 with `k = n`, `l = n'`, up to powers of `a`.
pub fn f2_closed(pt: &EvalPoint, n: i64, n1: i64) -> Result<Q> {
    if n < 0 || n1 < 1 {
        return Err(param_error(2, &[n, n1]));
    }
    let k = pt.constants();
    let c = closed_tangle_coeffs(pt);
    let [ca, cb, _] = &c.half;
    let [cd, ce, _] = &c.two_fifths;
    let (nu, n1u) = (n as u32, n1 as u32);
    let mut sum = Q::zero();
    for j in 0..=nu {
        for j1 in 0..=n1u {
            let coeff = &binomial(nu, j) * &binomial(n1u, j1);
            let term = &(&(&ca.pow(nu - j) * &cb.pow(j)) * &cd.pow(n1u - j1)) * &ce.pow(j1);
            let w = w2(j as i64 + j1 as i64, &pt.a, &k);
            sum = &sum + &(&(&coeff * &term) * &w);
        }
    }
    let lead = &k.g4.pow(n1u) * &k.h.pow(nu);
    divide_by_t2(&lead + &sum, &k)
}

/// `G4^n H^n' T2^n''`: Form 4 when `n > 0`, else Form 3 with `k = n'`,
/// `l = n''`.
pub fn f3_closed(pt: &EvalPoint, n: i64, n1: i64, n2: i64) -> Result<Q> {
    if n < 0 || n1 < 0 || n2 < 0 {
        return Err(param_error(3, &[n, n1, n2]));
    }
    let k = pt.constants();
    Ok(&(&k.g4.pow(n as u32) * &k.h.pow(n1 as u32)) * &k.t2.pow(n2 as u32))
}
