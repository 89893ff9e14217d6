use std::fmt;
use std::sync::OnceLock;

use crate::bracket::jones_invariants;
use crate::error::{Error, Result};
use crate::link::{Fraction, LinkDiagram, MontesinosDescriptor, Tangle};

use super::normal_form::NormalForm;
use super::tangle_reduce::{reduce_rational_tangle, BasicTangle};

/// Diagrams above this size are reduced to a basic tangle before the
/// state sum.
const DIRECT_CLASS_LIMIT: usize = 16;

const CLASS_TOLERANCE: f64 = 1e-6;

/// The four 5-move classes of rational links.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RationalClass {
    Unknot,
    TwoUnlink,
    Figure8,
    Hopf,
}

impl RationalClass {
    pub const ALL: [RationalClass; 4] = [
        RationalClass::Unknot,
        RationalClass::TwoUnlink,
        RationalClass::Figure8,
        RationalClass::Hopf,
    ];

    pub fn diagram(self) -> LinkDiagram {
        match self {
            RationalClass::Unknot => LinkDiagram::unknot(),
            RationalClass::TwoUnlink => LinkDiagram::unlink(2),
            RationalClass::Figure8 => Tangle::rational(&vec![2, 2].into()).numerator(),
            RationalClass::Hopf => Tangle::integer(2).numerator(),
        }
    }

    pub fn normal_form(self) -> NormalForm {
        match self {
            RationalClass::Unknot => NormalForm::Form3 {
                hopf: 0,
                trivial: 0,
            },
            RationalClass::TwoUnlink => NormalForm::Form3 {
                hopf: 0,
                trivial: 1,
            },
            RationalClass::Hopf => NormalForm::Form3 {
                hopf: 1,
                trivial: 0,
            },
            RationalClass::Figure8 => NormalForm::Form4 {
                fig8: 1,
                hopf: 0,
                trivial: 0,
            },
        }
    }

    fn norms() -> &'static [(RationalClass, f64, f64); 4] {
        static NORMS: OnceLock<[(RationalClass, f64, f64); 4]> = OnceLock::new();
        NORMS.get_or_init(|| {
            RationalClass::ALL.map(|c| {
                let inv = jones_invariants(&c.diagram()).expect("small diagram");
                (c, inv.v1, inv.v3)
            })
        })
    }

    /// Matches `(v1, v3)` of a diagram against the four classes.
    pub fn of_diagram(d: &LinkDiagram) -> Result<Self> {
        let inv = jones_invariants(d)?;
        Self::norms()
            .iter()
            .find(|(_, v1, v3)| {
                (v1 - inv.v1).abs() < CLASS_TOLERANCE && (v3 - inv.v3).abs() < CLASS_TOLERANCE
            })
            .map(|&(c, _, _)| c)
            .ok_or_else(|| {
                Error::Consistency(format!(
                    "(v1, v3) = ({}, {}) matches no rational class",
                    inv.v1, inv.v3
                ))
            })
    }
}

impl fmt::Display for RationalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RationalClass::Unknot => "unknot",
            RationalClass::TwoUnlink => "2-component unlink",
            RationalClass::Figure8 => "figure-8 knot",
            RationalClass::Hopf => "Hopf link",
        })
    }
}

/// The 5-move class of the numerator closure `N(T(f))`.
pub fn rational_link_class(f: Fraction) -> Result<RationalClass> {
    let tangle = Tangle::from_fraction(f);
    let tangle = if tangle.num_crossings() > DIRECT_CLASS_LIMIT {
        Tangle::from_fraction(reduce_rational_tangle(f)?.fraction())
    } else {
        tangle
    };
    RationalClass::of_diagram(&tangle.numerator())
}

/// How a basic tangle splits into an integer twist and a non-integer part.
enum Part {
    Twist(i64),
    Half(i64),
    TwoFifths,
    Infinity,
}

fn split(b: BasicTangle) -> Part {
    use BasicTangle::*;
    match b {
        Zero => Part::Twist(0),
        One => Part::Twist(1),
        MinusOne => Part::Twist(-1),
        Two => Part::Twist(2),
        MinusTwo => Part::Twist(-2),
        Half => Part::Half(0),
        MinusHalf => Part::Half(-1),
        ThreeHalves => Part::Half(1),
        MinusThreeHalves => Part::Half(-2),
        FiveHalves => Part::Half(2),
        TwoFifths => Part::TwoFifths,
        Infinity => Part::Infinity,
    }
}

/// Classifies a Montesinos link into one of the five normal forms.
pub fn classify_montesinos(m: &MontesinosDescriptor) -> Result<NormalForm> {
    let basics = m
        .factors()
        .iter()
        .map(|&f| reduce_rational_tangle(f))
        .collect::<Result<Vec<_>>>()?;
    if basics.contains(&BasicTangle::Infinity) {
        return classify_split(&basics, m.integer_part());
    }
    let mut twists = m.integer_part();
    let mut halves = 0u32;
    let mut fifths = 0u32;
    for &b in &basics {
        match split(b) {
            Part::Twist(n) => twists += n,
            Part::Half(n) => {
                halves += 1;
                twists += n;
            }
            Part::TwoFifths => fifths += 1,
            Part::Infinity => unreachable!("handled above"),
        }
    }
    if halves + fifths < 3 {
        let mut factors = vec![(1, 2); halves as usize];
        factors.extend(std::iter::repeat_n((2, 5), fifths as usize));
        let e = (twists + 2).rem_euclid(5) - 2;
        let reduced = MontesinosDescriptor::new(factors, e)?;
        return Ok(RationalClass::of_diagram(&reduced.to_diagram())?.normal_form());
    }
    if fifths > 0 {
        return NormalForm::form2(halves, fifths);
    }
    let l = (-twists).rem_euclid(5) as u32;
    if l <= halves {
        NormalForm::form1(halves - l, l)
    } else {
        Ok(NormalForm::Form5)
    }
}

/// With an `∞` summand the link is a split union of connected sums of
/// denominator closures.
fn classify_split(basics: &[BasicTangle], e: i64) -> Result<NormalForm> {
    let mut summands: Vec<Fraction> = basics.iter().map(|b| b.fraction()).collect();
    summands.push(Fraction::integer(e));
    let groups = basics
        .iter()
        .filter(|&&b| b == BasicTangle::Infinity)
        .count() as u32;
    let (mut fig8, mut hopf, mut trivial) = (0, 0, groups - 1);
    for f in summands.into_iter().filter(|f| !f.is_infinite()) {
        // D(T(x)) is N(T(-1/x)), and every class is its own mirror image
        match rational_link_class(f.recip())? {
            RationalClass::Unknot => {}
            RationalClass::TwoUnlink => trivial += 1,
            RationalClass::Figure8 => fig8 += 1,
            RationalClass::Hopf => hopf += 1,
        }
    }
    if fig8 > 0 {
        NormalForm::form4(fig8, hopf, trivial)
    } else {
        Ok(NormalForm::form3(hopf, trivial))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MontesinosDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn rational_classes() {
        let fr = |p, q| Fraction::new(p, q).unwrap();
        assert_eq!(
            rational_link_class(fr(1, 1)).unwrap(),
            RationalClass::Unknot
        );
        assert_eq!(rational_link_class(fr(2, 1)).unwrap(), RationalClass::Hopf);
        assert_eq!(
            rational_link_class(fr(5, 2)).unwrap(),
            RationalClass::Figure8
        );
        assert_eq!(
            rational_link_class(fr(0, 1)).unwrap(),
            RationalClass::TwoUnlink
        );
        assert_eq!(
            rational_link_class(Fraction::INFINITY).unwrap(),
            RationalClass::Unknot
        );
        assert_eq!(rational_link_class(fr(3, 1)).unwrap(), RationalClass::Hopf);
        assert_eq!(
            rational_link_class(fr(89, 55)).unwrap(),
            RationalClass::Unknot
        );
    }

    #[test]
    fn examples() {
        assert_eq!(
            classify_montesinos(&m("M(1/2,1/2,1/2;1)")).unwrap(),
            NormalForm::Form5
        );
        assert_eq!(
            classify_montesinos(&m("M(2/5,1/2,1/2)")).unwrap(),
            NormalForm::Form2 { k: 2, l: 1 }
        );
        assert_eq!(
            classify_montesinos(&m("M(-1/2,1/2,1/2)")).unwrap(),
            NormalForm::Form1 { k: 2, l: 1 }
        );
        assert_eq!(
            classify_montesinos(&m("M(1/5,1/5,1/2)")).unwrap(),
            NormalForm::Form3 {
                hopf: 1,
                trivial: 1
            }
        );
    }
}
