use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse Laurent polynomial with integer coefficients in a variable `s`.
///
/// Used for polynomials in `t^{1/2}` (where `s = t^{1/2}`, so a power of
/// `t` is stored at twice its exponent) and for the bracket variable `A`.
/// Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    coeffs: BTreeMap<i32, i64>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * s^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `coeff * t^exp`, i.e. `coeff * s^(2 exp)`.
    pub fn t_monomial(coeff: i64, exp: i32) -> Self {
        Self::monomial(coeff, 2 * exp)
    }

    /// Builds a polynomial in `t` from `(t exponent, coefficient)` pairs.
    pub fn from_t_terms(terms: &[(i32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(2 * e, c);
        }
        p
    }

    /// Builds a polynomial from `(s exponent, coefficient)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry = entry
            .checked_add(coeff)
            .expect("Laurent coefficient overflow");
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)`, by increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i32) -> Self {
        HalfLaurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        HalfLaurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, &x)| (e, x.checked_mul(c).expect("Laurent coefficient overflow")))
                .collect(),
        }
    }

    /// Substitutes `s -> s^{-1}`.
    pub fn invert_variable(&self) -> Self {
        HalfLaurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Substitutes `s -> s^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0, "substitution s -> s^0 is not invertible");
        HalfLaurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e * k, c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// True when every exponent is even, i.e. the value lies in `Z[t^{±1}]`.
    pub fn is_integral_in_t(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// Exact value at `s = i` (so `t = -1`) as a Gaussian integer `(re, im)`.
    pub fn eval_at_s_i(&self) -> (i128, i128) {
        let (mut re, mut im) = (0i128, 0i128);
        for (&e, &c) in &self.coeffs {
            let c = c as i128;
            match e.rem_euclid(4) {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                _ => im -= c,
            }
        }
        (re, im)
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                out.add_term(
                    e1 + e2,
                    c1.checked_mul(c2).expect("Laurent coefficient overflow"),
                );
            }
        }
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: HalfLaurent) -> HalfLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

/// Formats as a polynomial in `t`, writing half-integer powers as `t^(k/2)`.
impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.coeffs.iter().enumerate() {
            let sign = match (i, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.unsigned_abs();
            let mono = match (e % 2 == 0, e / 2) {
                (true, 0) => String::new(),
                (true, 1) => "t".to_string(),
                (true, k) => format!("t^{k}"),
                (false, _) => format!("t^({e}/2)"),
            };
            if mono.is_empty() {
                write!(f, "{sign}{mag}")?;
            } else if mag == 1 {
                write!(f, "{sign}{mono}")?;
            } else {
                write!(f, "{sign}{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_identities() {
        let t = HalfLaurent::t_monomial(1, 1);
        let one = HalfLaurent::one();
        let prod = &(&t + &one) * &(&t - &one);
        assert_eq!(prod, HalfLaurent::from_t_terms(&[(2, 1), (0, -1)]));
        assert_eq!(&prod + &HalfLaurent::zero(), prod);
        let s = HalfLaurent::monomial(1, 1);
        assert_eq!(&s * &s, t);
    }

    #[test]
    fn zero_terms_are_pruned() {
        let t = HalfLaurent::t_monomial(3, 2);
        let d = &t - &t;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn value_at_minus_one() {
        // t + t^3 - t^4 at t = -1 is -3
        let v = HalfLaurent::from_t_terms(&[(1, 1), (3, 1), (4, -1)]);
        assert_eq!(v.eval_at_s_i(), (-3, 0));
        // -s - 1/s at s = i is -i + i = 0
        let u = HalfLaurent::from_terms([(1, -1), (-1, -1)]);
        assert_eq!(u.eval_at_s_i(), (0, 0));
    }

    #[test]
    fn display() {
        let v = HalfLaurent::from_terms([(-1, -1), (0, 2), (4, -1)]);
        assert_eq!(v.to_string(), "-t^(-1/2) + 2 - t^2");
    }
}
