use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::{CycloInt, QuotientElement, RANK};
use super::laurent::HalfLaurent;
use crate::error::{Error, Result};

/// Canonical representative of a class under `x ~ ±s^k x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoteqClass {
    canonical: QuotientElement,
}

impl DoteqClass {
    pub fn canonical(&self) -> &QuotientElement {
        &self.canonical
    }

    pub fn is_zero(&self) -> bool {
        self.canonical.is_zero()
    }
}

impl fmt::Debug for DoteqClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoteqClass({})", self.canonical)
    }
}

impl fmt::Display for DoteqClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// Least element of `{±s^k x : 0 <= k < 20}` in lexicographic order.
///
/// Since `-1 = s^10` the orbit has at most 20 distinct elements, but the
/// minimum is taken over the whole orbit as written.
pub fn doteq_canonical(x: &QuotientElement) -> DoteqClass {
    let mut best = x.clone();
    let mut cur = x.clone();
    for _ in 0..20 {
        let neg = -&cur;
        if neg < best {
            best = neg;
        }
        if cur < best {
            best = cur.clone();
        }
        cur = cur.mul_s();
    }
    DoteqClass { canonical: best }
}

/// A field element compared up to 20th roots of unity.
#[derive(Clone)]
pub struct UnitOrbitValue {
    value: QuotientElement,
}

impl UnitOrbitValue {
    pub fn new(value: QuotientElement) -> Self {
        UnitOrbitValue { value }
    }

    pub fn value(&self) -> &QuotientElement {
        &self.value
    }

    /// Modulus under the standard embedding.
    pub fn norm(&self) -> f64 {
        complex_norm(&self.value, 1)
    }
}

impl PartialEq for UnitOrbitValue {
    fn eq(&self, other: &Self) -> bool {
        unit_orbit_eq(&self.value, &other.value)
    }
}

impl Eq for UnitOrbitValue {}

impl fmt::Debug for UnitOrbitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnitOrbitValue({})", self.value)
    }
}

/// True iff `a = b = 0` or `(a/b)^20 = 1`.
///
/// The 20th roots of unity in `Q(ζ20)` are exactly the powers of `s`, so
/// this checks `a = s^k b` for some `k`, which avoids forming the
/// twentieth power.
pub fn unit_orbit_eq(a: &QuotientElement, b: &QuotientElement) -> bool {
    if b.is_zero() {
        return a.is_zero();
    }
    let mut cur = b.clone();
    for _ in 0..20 {
        if &cur == a {
            return true;
        }
        cur = cur.mul_s();
    }
    false
}

/// Image of `p` in `Q[s]/(s^8 - s^6 + s^4 - s^2 + 1)`.
pub fn to_quotient(p: &HalfLaurent) -> QuotientElement {
    let mut acc = [0i128; RANK];
    for (e, c) in p.terms() {
        let basis = CycloInt::s_pow(e as i64).coords();
        for (slot, b) in acc.iter_mut().zip(basis) {
            *slot += c as i128 * b as i128;
        }
    }
    let mut out = QuotientElement::zero();
    let coords: [BigRational; RANK] =
        std::array::from_fn(|i| BigRational::from_integer(BigInt::from(acc[i])));
    for (i, c) in coords.into_iter().enumerate() {
        out = &out + &QuotientElement::s_pow(i as i64).scale(&c);
    }
    out
}

/// Exact value of `p` at `s = ζ20^n`, `t = exp(n π i / 5)`, for `n` in {1, 3}.
pub fn eval_at_root(p: &HalfLaurent, n: i64) -> Result<QuotientElement> {
    if n != 1 && n != 3 {
        return Err(Error::Parameter(format!(
            "root index must be 1 or 3, got {n}"
        )));
    }
    Ok(to_quotient(p).galois(n))
}

/// Modulus of the image of `x` under `s -> exp(2 π i e / 20)`.
pub fn complex_norm(x: &QuotientElement, embedding: i64) -> f64 {
    let (re, im) = x.to_complex(embedding);
    re.hypot(im)
}

pub fn field_div(a: &QuotientElement, b: &QuotientElement) -> Result<QuotientElement> {
    Ok(a * &b.inverse()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i32, i64)]) -> HalfLaurent {
        HalfLaurent::from_t_terms(terms)
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(
            to_quotient(&t(&[(5, 1)])),
            QuotientElement::from_integer(-1)
        );
        assert!(to_quotient(&t(&[(10, 1)])).is_one());
        assert!(to_quotient(&t(&[(4, 1), (3, -1), (2, 1), (1, -1), (0, 1)])).is_zero());
        assert!(to_quotient(&HalfLaurent::monomial(1, -1)).mul_s().is_one());
    }

    #[test]
    fn canonical_absorbs_units() {
        let x = to_quotient(&t(&[(0, 2), (1, -1), (3, 5)]));
        let c = doteq_canonical(&x);
        assert_eq!(doteq_canonical(&x.mul_s_pow(3)), c);
        assert_eq!(doteq_canonical(&-&x), c);
        assert!(doteq_canonical(&QuotientElement::zero()).is_zero());
    }

    #[test]
    fn orbit_equality() {
        let x = to_quotient(&t(&[(0, 1), (1, 1)]));
        assert!(unit_orbit_eq(&x, &x.mul_s_pow(7)));
        assert!(!unit_orbit_eq(
            &QuotientElement::zero(),
            &QuotientElement::one()
        ));
        assert!(!unit_orbit_eq(
            &QuotientElement::one(),
            &QuotientElement::zero()
        ));
        assert!(unit_orbit_eq(
            &QuotientElement::zero(),
            &QuotientElement::zero()
        ));
        assert!(!unit_orbit_eq(
            &x,
            &x.scale(&BigRational::from_integer(2.into()))
        ));
    }

    #[test]
    fn root_index_is_checked() {
        assert!(eval_at_root(&HalfLaurent::one(), 2).is_err());
        assert!(eval_at_root(&HalfLaurent::one(), 1).unwrap().is_one());
    }

    #[test]
    fn division() {
        let a = to_quotient(&t(&[(2, 1), (0, -1)]));
        let b = to_quotient(&t(&[(1, 1), (0, -1)]));
        assert_eq!(
            field_div(&a, &b).unwrap(),
            to_quotient(&t(&[(1, 1), (0, 1)]))
        );
        assert!(field_div(&a, &a).unwrap().is_one());
        let s_sum = to_quotient(&HalfLaurent::from_terms([(1, 1), (-1, 1)]));
        assert!(field_div(&QuotientElement::one(), &s_sum).is_ok());
        assert_eq!(
            field_div(&a, &QuotientElement::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn norm_examples() {
        let one_minus_t = t(&[(0, 1), (1, -1)]);
        let v = complex_norm(&eval_at_root(&one_minus_t, 1).unwrap(), 1);
        assert!((v - 0.618033988749895).abs() < 1e-12);
        let one_minus_t2 = t(&[(0, 1), (2, -1)]);
        let v = complex_norm(&eval_at_root(&one_minus_t2, 3).unwrap(), 1);
        assert!((v - 1.902113032590307).abs() < 1e-12);
        assert_eq!(complex_norm(&QuotientElement::zero(), 1), 0.0);
    }
}
