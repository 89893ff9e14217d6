use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

use super::diagram::LinkDiagram;
use super::fraction::Fraction;
use super::tangle::Tangle;

/// `M(q1/p1, ..., qn/pn; e)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MontesinosDescriptor {
    factors: Vec<Fraction>,
    integer_part: i64,
}

impl MontesinosDescriptor {
    /// Every factor must satisfy `0 < |q| < p` with `gcd(p, q) = 1`.
    pub fn new(factors: Vec<(i64, i64)>, integer_part: i64) -> Result<Self> {
        let factors = factors
            .into_iter()
            .map(|(q, p)| {
                if p <= 0 || q == 0 || q.abs() >= p || q.gcd(&p) != 1 {
                    return Err(Error::InvalidFraction {
                        p: q,
                        q: p,
                        msg: "Montesinos factor must satisfy 0 < |q| < p, gcd(p, q) = 1".into(),
                    });
                }
                Fraction::new(q, p)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MontesinosDescriptor {
            factors,
            integer_part,
        })
    }

    /// Factors `q/p` in order.
    pub fn factors(&self) -> &[Fraction] {
        &self.factors
    }

    pub fn integer_part(&self) -> i64 {
        self.integer_part
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Moves every `q` into `(0, p)`, compensating in the integer part.
    pub fn normalize(&self) -> Self {
        let mut e = self.integer_part;
        let factors = self
            .factors
            .iter()
            .map(|f| {
                if f.p() < 0 {
                    e -= 1;
                    Fraction::new(f.p() + f.q(), f.q()).expect("nonzero denominator")
                } else {
                    *f
                }
            })
            .collect();
        MontesinosDescriptor {
            factors,
            integer_part: e,
        }
    }

    /// Mirror image: every factor and the integer part change sign.
    pub fn mirror(&self) -> Self {
        MontesinosDescriptor {
            factors: self.factors.iter().map(Fraction::neg).collect(),
            integer_part: -self.integer_part,
        }
    }

    /// The tangle sum with one rational tangle of fraction `q/p` per
    /// factor and `e` integer twists at the end.
    pub fn to_tangle(&self) -> Tangle {
        let t = self.factors.iter().fold(Tangle::zero(), |acc, f| {
            acc.sum(&Tangle::from_fraction(f.recip()).flip())
        });
        t.sum(&Tangle::integer(self.integer_part))
    }

    /// Numerator closure of [`MontesinosDescriptor::to_tangle`]; `M(-3)`
    /// is the positive trefoil.
    pub fn to_diagram(&self) -> LinkDiagram {
        self.to_tangle().numerator()
    }

    /// `|prod p_i * (e + sum q_i/p_i)|`.
    pub fn determinant(&self) -> u64 {
        let prod: i128 = self.factors.iter().map(|f| f.q() as i128).product();
        let mut num = self.integer_part as i128 * prod;
        for f in &self.factors {
            num += f.p() as i128 * (prod / f.q() as i128);
        }
        num.unsigned_abs() as u64
    }
}

impl fmt::Display for MontesinosDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M(")?;
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}/{}", x.p(), x.q())?;
        }
        write!(f, ";{})", self.integer_part)
    }
}

impl FromStr for MontesinosDescriptor {
    type Err = Error;

    /// Parses `M(q1/p1,...,qn/pn;e)`. The `;e` part is optional, and a
    /// trailing bare integer after a comma is also read as `e`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t
            .strip_prefix('M')
            .map(str::trim_start)
            .and_then(|r| r.strip_prefix('('))
            .ok_or_else(|| Error::parse(0, "expected \"M(\""))?;
        let open = t.len() - body.len();
        let body = body
            .trim_end()
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(t.len(), "expected \")\""))?;
        let (list, e_text) = match body.split_once(';') {
            Some((l, e)) => (l, Some((e, open + l.len() + 1))),
            None => (body, None),
        };
        let mut factors = Vec::new();
        let mut e = 0i64;
        let mut pos = open;
        let items: Vec<&str> = if list.trim().is_empty() {
            Vec::new()
        } else {
            list.split(',').collect()
        };
        let last = items.len().saturating_sub(1);
        for (i, item) in items.iter().enumerate() {
            let word = item.trim();
            match word.split_once('/') {
                Some((q, p)) => {
                    let q: i64 = q
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(pos, format!("bad numerator {q:?}")))?;
                    let p: i64 = p
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(pos, format!("bad denominator {p:?}")))?;
                    factors.push((q, p));
                }
                None if i == last && e_text.is_none() => {
                    e = word
                        .parse()
                        .map_err(|_| Error::parse(pos, format!("bad integer part {word:?}")))?;
                }
                None => return Err(Error::parse(pos, format!("expected q/p, found {word:?}"))),
            }
            pos += item.len() + 1;
        }
        if let Some((et, epos)) = e_text {
            e = et
                .trim()
                .parse()
                .map_err(|_| Error::parse(epos, format!("bad integer part {et:?}")))?;
        }
        MontesinosDescriptor::new(factors, e)
    }
}
