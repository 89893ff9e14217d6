use std::fmt;

use crate::error::{Error, Result};
use crate::link::{LinkDiagram, MontesinosDescriptor, Tangle};

/// The five classes of Montesinos links up to 5-moves and mutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormalForm {
    /// `M(1/2 × k, -1/2 × l)`
    Form1 { k: u32, l: u32 },
    /// `M(1/2 × k, 2/5 × l)`
    Form2 { k: u32, l: u32 },
    /// Connected sum of `hopf` Hopf links, plus `trivial` split circles.
    Form3 { hopf: u32, trivial: u32 },
    /// As form 3 with at least one figure-8 summand.
    Form4 { fig8: u32, hopf: u32, trivial: u32 },
    /// `M(1/2, 1/2, 1/2; 1)`
    Form5,
}

impl NormalForm {
    pub fn form1(k: u32, l: u32) -> Result<Self> {
        if l > 4 || k + l < 3 {
            return Err(Error::Parameter(format!(
                "form 1 needs l <= 4 and k + l >= 3, got k={k}, l={l}"
            )));
        }
        Ok(NormalForm::Form1 { k, l })
    }

    pub fn form2(k: u32, l: u32) -> Result<Self> {
        if l < 1 || k + l < 3 {
            return Err(Error::Parameter(format!(
                "form 2 needs l >= 1 and k + l >= 3, got k={k}, l={l}"
            )));
        }
        Ok(NormalForm::Form2 { k, l })
    }

    pub fn form3(hopf: u32, trivial: u32) -> Self {
        NormalForm::Form3 { hopf, trivial }
    }

    pub fn form4(fig8: u32, hopf: u32, trivial: u32) -> Result<Self> {
        if fig8 == 0 {
            return Err(Error::Parameter("form 4 needs a figure-8 summand".into()));
        }
        Ok(NormalForm::Form4 {
            fig8,
            hopf,
            trivial,
        })
    }

    /// Checks the parameter constraints of a value built by hand.
    pub fn validate(self) -> Result<Self> {
        match self {
            NormalForm::Form1 { k, l } => Self::form1(k, l),
            NormalForm::Form2 { k, l } => Self::form2(k, l),
            NormalForm::Form4 {
                fig8,
                hopf,
                trivial,
            } => Self::form4(fig8, hopf, trivial),
            other => Ok(other),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            NormalForm::Form1 { .. } => 1,
            NormalForm::Form2 { .. } => 2,
            NormalForm::Form3 { .. } => 3,
            NormalForm::Form4 { .. } => 4,
            NormalForm::Form5 => 5,
        }
    }

    /// The `(k, l)` pair used in reports; form 4 reports its Hopf and
    /// trivial counts, form 5 has none.
    pub fn k_l(self) -> Option<(u32, u32)> {
        match self {
            NormalForm::Form1 { k, l } | NormalForm::Form2 { k, l } => Some((k, l)),
            NormalForm::Form3 { hopf, trivial } | NormalForm::Form4 { hopf, trivial, .. } => {
                Some((hopf, trivial))
            }
            NormalForm::Form5 => None,
        }
    }

    /// Sum of all parameters.
    pub fn weight(self) -> u32 {
        match self {
            NormalForm::Form1 { k, l } | NormalForm::Form2 { k, l } => k + l,
            NormalForm::Form3 { hopf, trivial } => hopf + trivial,
            NormalForm::Form4 {
                fig8,
                hopf,
                trivial,
            } => fig8 + hopf + trivial,
            NormalForm::Form5 => 0,
        }
    }

    /// The Montesinos template, for forms 1, 2 and 5.
    pub fn descriptor(self) -> Option<MontesinosDescriptor> {
        let rep = |groups: &[(usize, (i64, i64))], e: i64| {
            let factors = groups
                .iter()
                .flat_map(|&(n, f)| std::iter::repeat_n(f, n))
                .collect();
            MontesinosDescriptor::new(factors, e).expect("template factors are valid")
        };
        match self {
            NormalForm::Form1 { k, l } => {
                Some(rep(&[(k as usize, (1, 2)), (l as usize, (-1, 2))], 0))
            }
            NormalForm::Form2 { k, l } => {
                Some(rep(&[(k as usize, (1, 2)), (l as usize, (2, 5))], 0))
            }
            NormalForm::Form5 => Some(rep(&[(3, (1, 2))], 1)),
            _ => None,
        }
    }

    /// A diagram of the representative link.
    pub fn representative(self) -> LinkDiagram {
        if let Some(m) = self.descriptor() {
            return m.to_diagram();
        }
        let (fig8, hopf, trivial) = match self {
            NormalForm::Form3 { hopf, trivial } => (0, hopf, trivial),
            NormalForm::Form4 {
                fig8,
                hopf,
                trivial,
            } => (fig8, hopf, trivial),
            _ => unreachable!("montesinos forms handled above"),
        };
        let hopf_link = Tangle::integer(2).numerator();
        let figure8 = Tangle::rational(&vec![2, 2].into()).numerator();
        let summands = std::iter::repeat_n(&figure8, fig8 as usize)
            .chain(std::iter::repeat_n(&hopf_link, hopf as usize));
        let mut sum: Option<LinkDiagram> = None;
        for s in summands {
            sum = Some(match sum {
                None => s.clone(),
                Some(d) => d.connected_sum(1, s, 1).expect("arc 1 exists"),
            });
        }
        match sum {
            None => LinkDiagram::unlink(trivial as usize + 1),
            Some(d) => d.disjoint_union(&LinkDiagram::unlink(trivial as usize)),
        }
    }

    /// `|V(-1)|` of the representative link.
    pub fn determinant(self) -> u64 {
        if let Some(m) = self.descriptor() {
            return m.determinant();
        }
        let (fig8, hopf, trivial) = match self {
            NormalForm::Form3 { hopf, trivial } => (0, hopf, trivial),
            NormalForm::Form4 {
                fig8,
                hopf,
                trivial,
            } => (fig8, hopf, trivial),
            _ => unreachable!("montesinos forms handled above"),
        };
        if trivial > 0 {
            0
        } else {
            5u64.pow(fig8) * 2u64.pow(hopf)
        }
    }

    /// Every valid normal form with `weight() <= max_weight`.
    pub fn enumerate(max_weight: u32) -> Vec<NormalForm> {
        let mut out = vec![NormalForm::Form5];
        for m in 0..=max_weight {
            for l in 0..=m {
                let k = m - l;
                out.extend(Self::form1(k, l).ok());
                out.extend(Self::form2(k, l).ok());
                out.push(Self::form3(k, l));
            }
            for f in 1..=m {
                for l in 0..=m - f {
                    out.push(NormalForm::Form4 {
                        fig8: f,
                        hopf: m - f - l,
                        trivial: l,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NormalForm::Form5 => write!(f, "form 5"),
            NormalForm::Form4 {
                fig8,
                hopf,
                trivial,
            } => {
                write!(f, "form 4 for fig8={fig8}, k={hopf}, l={trivial}")
            }
            other => {
                let (k, l) = other.k_l().expect("forms 1-3 have parameters");
                write!(f, "form {} for k={k}, l={l}", other.number())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraints() {
        assert!(NormalForm::form1(1, 1).is_err());
        assert!(NormalForm::form1(0, 5).is_err());
        assert!(NormalForm::form2(3, 0).is_err());
        assert!(NormalForm::form4(0, 1, 1).is_err());
        assert!(NormalForm::Form1 { k: 2, l: 0 }.validate().is_err());
    }

    #[test]
    fn representatives() {
        assert_eq!(NormalForm::Form5.determinant(), 20);
        assert_eq!(
            NormalForm::form3(0, 0).representative(),
            LinkDiagram::unknot()
        );
        assert_eq!(
            NormalForm::form3(0, 2).representative().component_count(),
            3
        );
        let f4 = NormalForm::form4(1, 1, 0).unwrap();
        assert_eq!(f4.representative().num_crossings(), 6);
        assert_eq!(f4.determinant(), 10);
        assert_eq!(
            NormalForm::form1(2, 1)
                .unwrap()
                .representative()
                .num_crossings(),
            6
        );
    }

    #[test]
    fn enumeration_is_valid_and_distinct() {
        let all = NormalForm::enumerate(6);
        for nf in &all {
            assert_eq!(nf.validate().unwrap(), *nf);
            assert!(nf.weight() <= 6);
        }
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn display() {
        assert_eq!(NormalForm::form3(2, 0).to_string(), "form 3 for k=2, l=0");
        assert_eq!(NormalForm::Form5.to_string(), "form 5");
    }
}
