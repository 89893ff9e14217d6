use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// An extended rational `p/q` in lowest terms, with `∞ = 1/0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction {
    p: i64,
    q: i64,
}

impl Fraction {
    pub const INFINITY: Fraction = Fraction { p: 1, q: 0 };
    pub const ZERO: Fraction = Fraction { p: 0, q: 1 };

    /// Reduces `p/q` to lowest terms with `q >= 0`. Only `0/0` is rejected.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidFraction {
                p,
                q,
                msg: "0/0 is undefined".into(),
            });
        }
        if q == 0 {
            return Ok(Self::INFINITY);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(Fraction { p, q })
    }

    pub fn integer(n: i64) -> Self {
        Fraction { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn is_integer(&self) -> bool {
        self.q == 1
    }

    /// `1/x`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        if self.p == 0 {
            return Self::INFINITY;
        }
        if self.q == 0 {
            return Self::ZERO;
        }
        let s = self.p.signum();
        Fraction {
            p: s * self.q,
            q: s * self.p,
        }
    }

    pub fn neg(&self) -> Self {
        if self.q == 0 {
            return *self;
        }
        Fraction {
            p: -self.p,
            q: self.q,
        }
    }

    /// `n + 1/self`, the step of the continued-fraction recursion.
    fn push_entry(&self, n: i64) -> Result<Self> {
        let overflow = || Error::InvalidFraction {
            p: self.p,
            q: self.q,
            msg: "overflow while evaluating continued fraction".into(),
        };
        // n + q/p = (n p + q) / p
        let num = n
            .checked_mul(self.p)
            .and_then(|v| v.checked_add(self.q))
            .ok_or_else(overflow)?;
        Fraction::new(num, self.p)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (_, 0) => write!(f, "inf"),
            (p, 1) => write!(f, "{p}"),
            (p, q) => write!(f, "{p}/{q}"),
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `p/q`, a bare integer, `inf` or `1/0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Self::INFINITY);
        }
        let parse_int = |t: &str, pos: usize| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::parse(pos, format!("expected an integer, found {t:?}")))
        };
        match s.split_once('/') {
            Some((a, b)) => Fraction::new(parse_int(a, 0)?, parse_int(b, a.len() + 1)?),
            None => Ok(Fraction::integer(parse_int(s, 0)?)),
        }
    }
}

/// Entries `c1 ... cn` of a rational tangle, evaluated innermost first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    pub entries: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(entries: Vec<i64>) -> Self {
        ContinuedFraction { entries }
    }

    pub fn value(&self) -> Result<Fraction> {
        cf_value(self)
    }
}

impl From<Vec<i64>> for ContinuedFraction {
    fn from(entries: Vec<i64>) -> Self {
        ContinuedFraction { entries }
    }
}

/// `[[c1, ..., cr]] = cr + 1/[[c1, ..., c(r-1)]]`, with the empty list
/// evaluating to `∞`.
pub fn cf_value(cf: &ContinuedFraction) -> Result<Fraction> {
    cf.entries
        .iter()
        .try_fold(Fraction::INFINITY, |acc, &c| acc.push_entry(c))
}

/// An entry list evaluating to `f`.
///
/// Entries are produced by truncation toward zero, so all of them share
/// the sign of `f` and only the outermost entry can be zero. This is the
/// shortest such expansion; `∞` gives the empty list.
pub fn cf_from_fraction(f: Fraction) -> ContinuedFraction {
    if f.is_infinite() {
        return ContinuedFraction::default();
    }
    ContinuedFraction {
        entries: cf_expand_with(f, |p, q| p / q),
    }
}

/// An expansion of `f` using a caller-chosen rounding for each integer part.
pub(crate) fn cf_expand_with(f: Fraction, round: impl Fn(i128, i128) -> i128) -> Vec<i64> {
    if f.is_infinite() {
        return vec![0, 0];
    }
    let mut out = Vec::new();
    let (mut p, mut q) = (f.p as i128, f.q as i128);
    loop {
        let c = round(p, q);
        out.push(c as i64);
        let r = p - c * q;
        if r == 0 {
            break;
        }
        let (np, nq) = if r < 0 { (-q, -r) } else { (q, r) };
        p = np;
        q = nq;
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    #[test]
    fn values() {
        assert_eq!(cf_value(&vec![2, 1, 3].into()).unwrap(), fr(11, 3));
        assert_eq!(cf_value(&vec![5].into()).unwrap(), fr(5, 1));
        assert_eq!(cf_value(&vec![2, 2].into()).unwrap(), fr(5, 2));
        assert_eq!(cf_value(&vec![0, 0].into()).unwrap(), Fraction::INFINITY);
        assert_eq!(cf_value(&vec![].into()).unwrap(), Fraction::INFINITY);
    }

    #[test]
    fn expansions_round_trip() {
        for f in [
            fr(11, 3),
            fr(5, 1),
            fr(-3, 2),
            fr(1, 2),
            fr(0, 1),
            Fraction::INFINITY,
        ] {
            assert_eq!(cf_value(&cf_from_fraction(f)).unwrap(), f, "{f}");
        }
        assert_eq!(cf_from_fraction(fr(5, 1)).entries, vec![5]);
        assert_eq!(cf_from_fraction(fr(11, 3)).entries, vec![2, 1, 3]);
        let e = cf_from_fraction(fr(-7, 3)).entries;
        assert!(e.iter().all(|&c| c < 0));
    }

    #[test]
    fn normalisation() {
        assert_eq!(fr(2, -4), fr(-1, 2));
        assert_eq!(fr(3, 0), Fraction::INFINITY);
        assert!(Fraction::new(0, 0).is_err());
        assert_eq!(fr(-2, 3).recip(), fr(-3, 2));
        assert_eq!("-1/4".parse::<Fraction>().unwrap(), fr(-1, 4));
        assert_eq!("7".parse::<Fraction>().unwrap(), fr(7, 1));
    }
}
