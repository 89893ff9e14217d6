use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Degree of the 20th cyclotomic polynomial.
pub const RANK: usize = 8;

/// Exponents `j` for which `s -> s^j` is a field automorphism.
pub const GALOIS_EXPONENTS: [i32; 8] = [1, 3, 7, 9, 11, 13, 17, 19];

/// Reduces a coefficient vector of length up to 15 modulo
/// `s^8 - s^6 + s^4 - s^2 + 1`, i.e. `s^8 = s^6 - s^4 + s^2 - 1`.
fn reduce_in_place<T>(r: &mut [T])
where
    T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T> + for<'a> std::ops::SubAssign<&'a T>,
{
    for d in (RANK..r.len()).rev() {
        let c = std::mem::replace(&mut r[d], T::zero());
        if c.is_zero() {
            continue;
        }
        r[d - 2] += &c;
        r[d - 4] -= &c;
        r[d - 6] += &c;
        r[d - 8] -= &c;
    }
}

/// An element of `Q[s]/(s^8 - s^6 + s^4 - s^2 + 1) = Q(ζ20)`.
///
/// Coordinates are in the power basis `1, s, ..., s^7`. With `t = s^2`
/// the modulus becomes `t^4 - t^3 + t^2 - t + 1 = (t^5 + 1)/(t + 1)`,
/// so this is the field in which the reduced Jones polynomial lives.
/// The ordering is lexicographic on the coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotientElement {
    coords: [BigRational; RANK],
}

impl QuotientElement {
    pub fn zero() -> Self {
        QuotientElement {
            coords: std::array::from_fn(|_| BigRational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        let mut x = Self::zero();
        x.coords[0] = BigRational::from_integer(BigInt::from(n));
        x
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut x = Self::zero();
        x.coords[0] = r;
        x
    }

    /// Builds an element from its 8 integer coordinates.
    pub fn from_coords(c: [i64; RANK]) -> Self {
        QuotientElement {
            coords: c.map(|v| BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn coords(&self) -> &[BigRational; RANK] {
        &self.coords
    }

    /// `s^k` for any integer `k` (using `s^20 = 1`).
    pub fn s_pow(k: i64) -> Self {
        Self::from_coords(CycloInt::s_pow(k).coords())
    }

    /// `t^k = s^{2k}`.
    pub fn t_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// Rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coords[0])
    }

    /// Multiplication by the generator `s`.
    pub fn mul_s(&self) -> Self {
        let mut out: [BigRational; RANK + 1] = std::array::from_fn(|_| BigRational::zero());
        for (i, c) in self.coords.iter().enumerate() {
            out[i + 1] = c.clone();
        }
        reduce_in_place(&mut out);
        QuotientElement {
            coords: std::array::from_fn(|i| out[i].clone()),
        }
    }

    /// Multiplication by `s^k`.
    pub fn mul_s_pow(&self, k: i64) -> Self {
        let mut x = self.clone();
        for _ in 0..k.rem_euclid(20) {
            x = x.mul_s();
        }
        x
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inverse()?.pow((-n) as u32))
        }
    }

    /// Image under the automorphism `s -> s^j`.
    pub fn galois(&self, j: i64) -> Self {
        let mut acc = Self::zero();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::s_pow(i as i64 * j).scale(c);
            acc = &acc + &term;
        }
        acc
    }

    /// Complex conjugation, `s -> s^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(19)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QuotientElement {
            coords: std::array::from_fn(|i| &self.coords[i] * c),
        }
    }

    /// Field norm down to `Q`: the product of all 8 conjugates.
    pub fn norm(&self) -> BigRational {
        let mut acc = self.clone();
        for &j in &GALOIS_EXPONENTS[1..] {
            acc = &acc * &self.galois(j as i64);
        }
        acc.as_rational()
            .cloned()
            .expect("field norm must be rational")
    }

    /// Multiplicative inverse, computed as the product of the other
    /// conjugates divided by the norm.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut others = Self::one();
        for &j in &GALOIS_EXPONENTS[1..] {
            others = &others * &self.galois(j as i64);
        }
        let n = (&others * self)
            .as_rational()
            .cloned()
            .ok_or_else(|| Error::Consistency("norm is not rational".into()))?;
        Ok(others.scale(&n.recip()))
    }

    /// Complex value under the embedding `s -> exp(2 pi i e / 20)`.
    pub fn to_complex(&self, embedding: i64) -> (f64, f64) {
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rational_to_f64(c);
            let ang = std::f64::consts::PI * (embedding * i as i64).rem_euclid(20) as f64 / 10.0;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Largest absolute value of a numerator or denominator, as a size hint.
    pub fn height_bits(&self) -> u64 {
        self.coords
            .iter()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    match (c.numer().to_f64(), c.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // very large coordinates: scale both down together
            let shift = c.numer().bits().max(c.denom().bits()).saturating_sub(1000);
            let n = (c.numer().abs() >> shift).to_f64().unwrap_or(f64::MAX);
            let d = (c.denom() >> shift).to_f64().unwrap_or(f64::MAX);
            if c.is_negative() {
                -n / d
            } else {
                n / d
            }
        }
    }
}

impl Ord for QuotientElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl PartialOrd for QuotientElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &QuotientElement {
    type Output = QuotientElement;
    fn add(self, rhs: &QuotientElement) -> QuotientElement {
        QuotientElement {
            coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]),
        }
    }
}

impl Sub for &QuotientElement {
    type Output = QuotientElement;
    fn sub(self, rhs: &QuotientElement) -> QuotientElement {
        QuotientElement {
            coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]),
        }
    }
}

impl Mul for &QuotientElement {
    type Output = QuotientElement;
    fn mul(self, rhs: &QuotientElement) -> QuotientElement {
        let mut out: [BigRational; 2 * RANK - 1] = std::array::from_fn(|_| BigRational::zero());
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        reduce_in_place(&mut out);
        QuotientElement {
            coords: std::array::from_fn(|i| out[i].clone()),
        }
    }
}

impl Neg for &QuotientElement {
    type Output = QuotientElement;
    fn neg(self) -> QuotientElement {
        QuotientElement {
            coords: std::array::from_fn(|i| -&self.coords[i]),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuotientElement {
            type Output = QuotientElement;
            fn $m(self, rhs: QuotientElement) -> QuotientElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QuotientElement {
    type Output = QuotientElement;
    fn neg(self) -> QuotientElement {
        -&self
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mono = match i {
                0 => String::new(),
                1 => "s".into(),
                _ => format!("s^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{sign}{mag}")?;
            } else if mag.is_one() {
                write!(f, "{sign}{mono}")?;
            } else {
                write!(f, "{sign}{mag}*{mono}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// An element of `Z[ζ20]` with machine-integer coordinates.
///
/// The skein engine works entirely in this ring: its evaluation points
/// and the inverse of `z` are integral there.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CycloInt {
    c: [i64; RANK],
}

impl CycloInt {
    pub const ZERO: CycloInt = CycloInt { c: [0; RANK] };
    pub const ONE: CycloInt = CycloInt {
        c: [1, 0, 0, 0, 0, 0, 0, 0],
    };

    pub fn new(c: [i64; RANK]) -> Self {
        CycloInt { c }
    }

    pub fn from_integer(n: i64) -> Self {
        let mut c = [0; RANK];
        c[0] = n;
        CycloInt { c }
    }

    pub fn coords(&self) -> [i64; RANK] {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn mul_s(&self) -> Self {
        let top = self.c[RANK - 1];
        let mut c = [0i64; RANK];
        c[1..RANK].copy_from_slice(&self.c[..RANK - 1]);
        c[6] = c[6].checked_add(top).expect(OVERFLOW);
        c[4] = c[4].checked_sub(top).expect(OVERFLOW);
        c[2] = c[2].checked_add(top).expect(OVERFLOW);
        c[0] = c[0].checked_sub(top).expect(OVERFLOW);
        CycloInt { c }
    }

    pub fn mul_s_pow(&self, k: i64) -> Self {
        let mut x = *self;
        for _ in 0..k.rem_euclid(20) {
            x = x.mul_s();
        }
        x
    }

    pub fn s_pow(k: i64) -> Self {
        S_POWERS[k.rem_euclid(20) as usize]
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::ONE;
        for _ in 0..n {
            acc = acc * *self;
        }
        acc
    }

    pub fn galois(&self, j: i64) -> Self {
        let mut acc = Self::ZERO;
        for (i, &x) in self.c.iter().enumerate() {
            if x != 0 {
                acc = acc + Self::s_pow(i as i64 * j).scale(x);
            }
        }
        acc
    }

    pub fn scale(&self, k: i64) -> Self {
        CycloInt {
            c: self.c.map(|x| x.checked_mul(k).expect(OVERFLOW)),
        }
    }

    pub fn to_quotient(&self) -> QuotientElement {
        QuotientElement::from_coords(self.c)
    }

    /// Converts back from the rational field, failing when a coordinate
    /// is not an integer.
    pub fn try_from_quotient(x: &QuotientElement) -> Option<Self> {
        let mut c = [0i64; RANK];
        for (slot, r) in c.iter_mut().zip(x.coords()) {
            if !r.is_integer() {
                return None;
            }
            *slot = r.to_integer().to_i64()?;
        }
        Some(CycloInt { c })
    }
}

const OVERFLOW: &str = "coefficient overflow in Z[zeta_20]";

const fn s_power_table() -> [CycloInt; 20] {
    let mut out = [CycloInt::ZERO; 20];
    let mut cur = [1i64, 0, 0, 0, 0, 0, 0, 0];
    let mut k = 0;
    while k < 20 {
        out[k] = CycloInt { c: cur };
        let top = cur[RANK - 1];
        let mut next = [0i64; RANK];
        let mut i = RANK - 1;
        while i > 0 {
            next[i] = cur[i - 1];
            i -= 1;
        }
        next[6] += top;
        next[4] -= top;
        next[2] += top;
        next[0] -= top;
        cur = next;
        k += 1;
    }
    out
}

static S_POWERS: [CycloInt; 20] = s_power_table();

impl Add for CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: CycloInt) -> CycloInt {
        CycloInt {
            c: std::array::from_fn(|i| self.c[i].checked_add(rhs.c[i]).expect(OVERFLOW)),
        }
    }
}

impl Sub for CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: CycloInt) -> CycloInt {
        CycloInt {
            c: std::array::from_fn(|i| self.c[i].checked_sub(rhs.c[i]).expect(OVERFLOW)),
        }
    }
}

impl Neg for CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        CycloInt {
            c: self.c.map(|x| x.checked_neg().expect(OVERFLOW)),
        }
    }
}

impl Mul for CycloInt {
    type Output = CycloInt;
    fn mul(self, rhs: CycloInt) -> CycloInt {
        let mut out = [0i128; 2 * RANK - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                out[i + j] += a as i128 * b as i128;
            }
        }
        for d in (RANK..out.len()).rev() {
            let v = out[d];
            if v == 0 {
                continue;
            }
            out[d] = 0;
            out[d - 2] += v;
            out[d - 4] -= v;
            out[d - 6] += v;
            out[d - 8] -= v;
        }
        CycloInt {
            c: std::array::from_fn(|i| i64::try_from(out[i]).expect(OVERFLOW)),
        }
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_quotient())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twentieth_power_of_s_is_one() {
        assert!(QuotientElement::s_pow(20).is_one());
        let mut x = QuotientElement::one();
        for _ in 0..20 {
            x = &x * &QuotientElement::s_pow(1);
        }
        assert!(x.is_one());
        assert_eq!(QuotientElement::s_pow(10), -QuotientElement::one());
    }

    #[test]
    fn modulus_in_t_vanishes() {
        let t = |k| QuotientElement::t_pow(k);
        let x = &(&(&(&t(4) - &t(3)) + &t(2)) - &t(1)) + &QuotientElement::one();
        assert!(x.is_zero());
        assert_eq!(t(5), -QuotientElement::one());
        assert!(t(10).is_one());
    }

    #[test]
    fn inverse_of_s_plus_inverse() {
        let x = &QuotientElement::s_pow(1) + &QuotientElement::s_pow(-1);
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert_eq!(
            QuotientElement::zero().inverse(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn integer_ring_agrees_with_field() {
        let a = CycloInt::new([1, -2, 0, 3, 0, 0, 1, -1]);
        let b = CycloInt::new([0, 1, 1, 0, -4, 2, 0, 5]);
        assert_eq!((a * b).to_quotient(), &a.to_quotient() * &b.to_quotient());
        assert_eq!(a.mul_s_pow(7).to_quotient(), a.to_quotient().mul_s_pow(7));
        assert_eq!(a.galois(3).to_quotient(), a.to_quotient().galois(3));
    }

    #[test]
    fn complex_embedding_of_s() {
        let (re, im) = QuotientElement::s_pow(1).to_complex(1);
        let ang = std::f64::consts::PI / 10.0;
        assert!((re - ang.cos()).abs() < 1e-15 && (im - ang.sin()).abs() < 1e-15);
    }
}
