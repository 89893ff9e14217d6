use crate::cyclo::{CycloInt, QuotientElement as Q};
use crate::error::{Error, Result};

/// A point `(a, z)` at which the regular-isotopy Kauffman polynomial is
/// evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    pub a: Q,
    pub z: Q,
    pub(crate) ring: RingPoint,
}

/// The same point with every constant the engine needs, in `Z[ζ20]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RingPoint {
    pub a: CycloInt,
    pub a_inv: CycloInt,
    pub z: CycloInt,
    pub t2: CycloInt,
}

fn integral(x: &Q, what: &str) -> Result<CycloInt> {
    CycloInt::try_from_quotient(x)
        .ok_or_else(|| Error::Parameter(format!("{what} = {x} is not integral in Z[zeta_20]")))
}

impl EvalPoint {
    /// Any point where `a` is a unit and `-1 + (a + 1/a)/z` is integral.
    pub fn new(a: Q, z: Q) -> Result<Self> {
        let a_inv = a.inverse()?;
        let a1 = &a + &a_inv;
        let t2 = &(&a1 * &z.inverse()?) - &Q::one();
        let ring = RingPoint {
            a: integral(&a, "a")?,
            a_inv: integral(&a_inv, "1/a")?,
            z: integral(&z, "z")?,
            t2: integral(&t2, "T2")?,
        };
        Ok(EvalPoint { a, z, ring })
    }

    /// `a = e^(2 pi i m/5)`, `z = 2 cos(2 pi n/5)`; requires `n != ±m`
    /// and `n` not divisible by 5.
    pub fn five_move(m: i64, n: i64) -> Result<Self> {
        let (m, n) = (m.rem_euclid(5), n.rem_euclid(5));
        if n == 0 || n == m || n == (5 - m) % 5 {
            return Err(Error::Parameter(format!(
                "(m, n) = ({m}, {n}) is not an admissible 5-move point"
            )));
        }
        let a = Q::s_pow(4 * m);
        let z = &Q::s_pow(4 * n) + &Q::s_pow(-4 * n);
        Self::new(a, z)
    }

    /// `Q(2 cos 2 pi/5)`.
    pub fn q1() -> Self {
        Self::five_move(0, 1).expect("admissible")
    }

    /// `Q(2 cos 4 pi/5)`.
    pub fn q2() -> Self {
        Self::five_move(0, 2).expect("admissible")
    }

    /// `F(e^(2 pi i/5), 2 cos 4 pi/5)`.
    pub fn f1() -> Self {
        Self::five_move(1, 2).expect("admissible")
    }

    /// `F(e^(4 pi i/5), 2 cos 2 pi/5)`.
    pub fn f2() -> Self {
        Self::five_move(2, 1).expect("admissible")
    }

    /// The four 5-move points in the order `q1, q2, f1, f2`.
    pub fn standard() -> [EvalPoint; 4] {
        [Self::q1(), Self::q2(), Self::f1(), Self::f2()]
    }

    /// The point where `Λ` specializes to the Kauffman bracket at
    /// `A = s^a_exp`: `a = -A^-3`, `z = A + 1/A`.
    pub fn bracket(a_exp: i64) -> Result<Self> {
        let a = -Q::s_pow(-3 * a_exp);
        let z = &Q::s_pow(a_exp) + &Q::s_pow(-a_exp);
        Self::new(a, z)
    }

    pub fn constants(&self) -> SkeinConstants {
        SkeinConstants::at(self)
    }
}

/// `Λ` of the 2-component unlink, Hopf link, figure-8 knot and negative
/// trefoil at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinConstants {
    pub a1: Q,
    pub t2: Q,
    pub h: Q,
    pub g4: Q,
    pub g3: Q,
}

impl SkeinConstants {
    pub fn at(pt: &EvalPoint) -> Self {
        let (a, z) = (&pt.a, &pt.z);
        let a_inv = a.inverse().expect("a is a unit");
        let a1 = a + &a_inv;
        let one = Q::one();
        let t2 = pt.ring.t2.to_quotient();
        let za1 = z * &a1;
        let h = &za1 - &t2;
        let a1sq = &a1 * &a1;
        let z2 = z * z;
        let g4 = &(&(&(&one - &a1sq) - &za1) + &(&z2 * &a1sq)) + &(&(&z2 * z) * &a1);
        let g3 = &(&(-&(&a_inv + &(&Q::from_integer(2) * a))) + &(&za1 * &a_inv)) + &(&z2 * &a1);
        SkeinConstants { a1, t2, h, g4, g3 }
    }
}
