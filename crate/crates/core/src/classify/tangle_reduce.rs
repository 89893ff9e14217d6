use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::link::{cf_expand_with, cf_value, ContinuedFraction, Fraction};

/// The twelve representatives of rational tangles up to 5-moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasicTangle {
    Zero,
    Infinity,
    One,
    MinusOne,
    Two,
    MinusTwo,
    Half,
    MinusHalf,
    ThreeHalves,
    MinusThreeHalves,
    TwoFifths,
    FiveHalves,
}

impl BasicTangle {
    pub const ALL: [BasicTangle; 12] = [
        BasicTangle::Zero,
        BasicTangle::Infinity,
        BasicTangle::One,
        BasicTangle::MinusOne,
        BasicTangle::Two,
        BasicTangle::MinusTwo,
        BasicTangle::Half,
        BasicTangle::MinusHalf,
        BasicTangle::ThreeHalves,
        BasicTangle::MinusThreeHalves,
        BasicTangle::TwoFifths,
        BasicTangle::FiveHalves,
    ];

    pub fn fraction(self) -> Fraction {
        let (p, q) = match self {
            BasicTangle::Zero => (0, 1),
            BasicTangle::Infinity => (1, 0),
            BasicTangle::One => (1, 1),
            BasicTangle::MinusOne => (-1, 1),
            BasicTangle::Two => (2, 1),
            BasicTangle::MinusTwo => (-2, 1),
            BasicTangle::Half => (1, 2),
            BasicTangle::MinusHalf => (-1, 2),
            BasicTangle::ThreeHalves => (3, 2),
            BasicTangle::MinusThreeHalves => (-3, 2),
            BasicTangle::TwoFifths => (2, 5),
            BasicTangle::FiveHalves => (5, 2),
        };
        Fraction::new(p, q).expect("basic fractions are valid")
    }

    pub fn from_fraction(f: Fraction) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.fraction() == f)
    }
}

impl fmt::Display for BasicTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.fraction(), f)
    }
}

impl FromStr for BasicTangle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let f: Fraction = s.parse()?;
        Self::from_fraction(f)
            .ok_or_else(|| Error::Parameter(format!("{s} is not one of the 12 basic tangles")))
    }
}

/// `±(p mod 5, q mod 5)`, constant on 5-move classes of rational tangles.
pub fn residue_key(f: Fraction) -> (i64, i64) {
    let a = (f.p().rem_euclid(5), f.q().rem_euclid(5));
    let b = ((-f.p()).rem_euclid(5), (-f.q()).rem_euclid(5));
    a.min(b)
}

/// Limits of the breadth-first search.
#[derive(Clone, Copy, Debug)]
pub struct ReduceLimits {
    pub max_depth: usize,
    /// Entries are kept in `[-entry_bound, entry_bound]`.
    pub entry_bound: i64,
    /// Intermediate fractions with `|p|` or `q` above this are discarded.
    pub height_bound: i64,
}

impl Default for ReduceLimits {
    fn default() -> Self {
        ReduceLimits {
            max_depth: 64,
            entry_bound: 7,
            height_bound: 200,
        }
    }
}

type Round = fn(i128, i128) -> i128;

const ROUNDINGS: [Round; 4] = [
    |p, q| p / q,
    |p, q| p.div_euclid(q),
    |p, q| -((-p).div_euclid(q)),
    |p, q| (2 * p + q).div_euclid(2 * q),
];

/// Neighbours of `f`: for several continued-fraction expansions, reduce
/// every entry into `[-2, 2]` and then apply one more twist of `±5` to a
/// single entry.
fn neighbours(f: Fraction, limits: &ReduceLimits) -> Vec<Fraction> {
    let mut out = Vec::new();
    for round in ROUNDINGS {
        let entries: Vec<i64> = cf_expand_with(f, round)
            .into_iter()
            .map(|c| (c + 2).rem_euclid(5) - 2)
            .collect();
        let mut push = |es: Vec<i64>| {
            if let Ok(v) = cf_value(&ContinuedFraction::new(es)) {
                out.push(v);
            }
        };
        push(entries.clone());
        for i in 0..entries.len() {
            for delta in [5, -5] {
                let c = entries[i] + delta;
                if c.abs() > limits.entry_bound {
                    continue;
                }
                let mut es = entries.clone();
                es[i] = c;
                push(es);
            }
        }
    }
    out.retain(|g| g.p().abs() <= limits.height_bound && g.q() <= limits.height_bound);
    out
}

/// Reduces `T(f)` to one of the basic tangles by breadth-first search
/// over 5-moves on twist regions.
pub fn reduce_rational_tangle(f: Fraction) -> Result<BasicTangle> {
    reduce_with_limits(f, &ReduceLimits::default())
}

pub fn reduce_with_limits(f: Fraction, limits: &ReduceLimits) -> Result<BasicTangle> {
    let key = residue_key(f);
    let mut seen = HashSet::from([f]);
    let mut queue = VecDeque::from([(f, 0usize)]);
    while let Some((x, depth)) = queue.pop_front() {
        if let Some(b) = BasicTangle::from_fraction(x) {
            if residue_key(x) != key {
                return Err(Error::Consistency(format!(
                    "reduction of {f} reached {x}, which lies in another 5-move class"
                )));
            }
            return Ok(b);
        }
        if depth >= limits.max_depth {
            continue;
        }
        for y in neighbours(x, limits) {
            if seen.insert(y) {
                queue.push_back((y, depth + 1));
            }
        }
    }
    Err(Error::Consistency(format!(
        "no basic tangle reached from {f} within depth {}",
        limits.max_depth
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    #[test]
    fn basic_tangles_are_fixed() {
        for b in BasicTangle::ALL {
            assert_eq!(reduce_rational_tangle(b.fraction()).unwrap(), b);
        }
    }

    #[test]
    fn examples() {
        assert_eq!(
            reduce_rational_tangle(fr(7, 2)).unwrap(),
            BasicTangle::MinusThreeHalves
        );
        assert_eq!(reduce_rational_tangle(fr(7, 1)).unwrap(), BasicTangle::Two);
        assert_eq!(reduce_rational_tangle(fr(5, 1)).unwrap(), BasicTangle::Zero);
    }

    #[test]
    fn keys_of_basic_tangles_are_distinct() {
        let keys: HashSet<_> = BasicTangle::ALL
            .iter()
            .map(|b| residue_key(b.fraction()))
            .collect();
        assert_eq!(keys.len(), 12);
    }

    #[test]
    fn every_small_fraction_reduces() {
        for p in -30i64..=30 {
            for q in 1..=30 {
                let f = fr(p, q);
                if f.q() != q {
                    continue;
                }
                let b = reduce_rational_tangle(f).unwrap();
                assert_eq!(residue_key(b.fraction()), residue_key(f), "{f}");
            }
        }
    }
}
