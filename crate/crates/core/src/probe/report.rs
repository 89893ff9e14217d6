use std::fmt;

use crate::classify::NormalForm;

/// A normal form as found by the probe. Form 4 is detected only through
/// `V̄ = 0`, so it carries no parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProbeForm {
    Form1 { k: u32, l: u32 },
    Form2 { k: u32, l: u32 },
    Form3 { k: u32, l: u32 },
    Form4,
    Form5,
}

impl ProbeForm {
    pub fn number(self) -> u8 {
        match self {
            ProbeForm::Form1 { .. } => 1,
            ProbeForm::Form2 { .. } => 2,
            ProbeForm::Form3 { .. } => 3,
            ProbeForm::Form4 => 4,
            ProbeForm::Form5 => 5,
        }
    }

    pub fn k_l(self) -> Option<(u32, u32)> {
        match self {
            ProbeForm::Form1 { k, l } | ProbeForm::Form2 { k, l } | ProbeForm::Form3 { k, l } => {
                Some((k, l))
            }
            _ => None,
        }
    }

    /// The normal form with these parameters; `None` for form 4.
    pub fn normal_form(self) -> Option<NormalForm> {
        match self {
            ProbeForm::Form1 { k, l } => NormalForm::form1(k, l).ok(),
            ProbeForm::Form2 { k, l } => NormalForm::form2(k, l).ok(),
            ProbeForm::Form3 { k, l } => Some(NormalForm::form3(k, l)),
            ProbeForm::Form4 => None,
            ProbeForm::Form5 => Some(NormalForm::Form5),
        }
    }

    /// The same class for the mirror image.
    pub fn mirror(self) -> Self {
        match self {
            ProbeForm::Form1 { k, l } => ProbeForm::Form1 { k: l, l: k },
            other => other,
        }
    }
}

impl From<NormalForm> for ProbeForm {
    fn from(nf: NormalForm) -> Self {
        match nf {
            NormalForm::Form1 { k, l } => ProbeForm::Form1 { k, l },
            NormalForm::Form2 { k, l } => ProbeForm::Form2 { k, l },
            NormalForm::Form3 { hopf, trivial } => ProbeForm::Form3 {
                k: hopf,
                l: trivial,
            },
            NormalForm::Form4 { .. } => ProbeForm::Form4,
            NormalForm::Form5 => ProbeForm::Form5,
        }
    }
}

impl fmt::Display for ProbeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k_l() {
            Some((k, l)) => write!(f, "form {} for k={k}, l={l}", self.number()),
            None => write!(f, "form {}", self.number()),
        }
    }
}

/// Which invariants a match survived.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Jones,
    JonesKauffman,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Jones => "jones",
            Stage::JonesKauffman => "jones+kauffman",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormMatch {
    pub form: ProbeForm,
    pub matched_by: Stage,
    /// Found on the mirror image of the input diagram.
    pub mirror: bool,
}

/// `Matched` only says no invariant rules the Montesinos property out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Matched,
    RuledOut,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Matched => "matched",
            Verdict::RuledOut => "ruled_out",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub name: String,
    pub matches: Vec<FormMatch>,
}

impl ProbeReport {
    pub fn verdict(&self) -> Verdict {
        if self.matches.is_empty() {
            Verdict::RuledOut
        } else {
            Verdict::Matched
        }
    }

    /// The match shown in the one-line report: matches on the diagram
    /// itself come before mirror matches, and form 5 before the form 3
    /// class it shares `V̄` with; otherwise the first match found.
    pub fn primary(&self) -> Option<&FormMatch> {
        let rank = |m: &FormMatch| {
            let shadowed = m.form == ProbeForm::Form3 { k: 0, l: 1 }
                && self
                    .matches
                    .iter()
                    .any(|n| n.form == ProbeForm::Form5 && n.mirror == m.mirror);
            (m.mirror, shadowed)
        };
        self.matches.iter().min_by_key(|m| rank(m))
    }

    /// `<name> match form <f> for k=<k>, l=<l>`, `<name> form 5`, or the
    /// bare name when ruled out.
    pub fn human_line(&self) -> String {
        let name = self.name.replace('_', " ");
        match self.primary() {
            None => name,
            Some(m) if m.form == ProbeForm::Form5 => format!("{name} form 5"),
            Some(m) => format!("{name} match {}", m.form),
        }
    }

    /// One `name\tform\tk\tl\tstage` row per distinct match, or a single
    /// `name\t\t\t\truled_out` row.
    pub fn tsv_rows(&self) -> Vec<String> {
        if self.matches.is_empty() {
            return vec![format!("{}\t\t\t\t{}", self.name, Verdict::RuledOut)];
        }
        let mut rows: Vec<String> = Vec::new();
        for m in &self.matches {
            let (k, l) = match m.form.k_l() {
                Some((k, l)) => (k.to_string(), l.to_string()),
                None => (String::new(), String::new()),
            };
            let row = format!(
                "{}\t{}\t{k}\t{l}\t{}",
                self.name,
                m.form.number(),
                m.matched_by
            );
            if !rows.contains(&row) {
                rows.push(row);
            }
        }
        rows
    }
}

/// Lays out lines in columns filled top to bottom, each column padded to
/// `width` characters.
pub fn columns(lines: &[String], count: usize, width: usize) -> Vec<String> {
    let count = count.max(1);
    let rows = lines.len().div_ceil(count);
    (0..rows)
        .map(|r| {
            let mut row = String::new();
            for c in 0..count {
                let Some(cell) = lines.get(c * rows + r) else {
                    break;
                };
                if c + 1 < count && lines.get((c + 1) * rows + r).is_some() {
                    row.push_str(&format!("{cell:<width$}"));
                } else {
                    row.push_str(cell);
                }
            }
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(matches: Vec<(ProbeForm, bool)>) -> ProbeReport {
        ProbeReport {
            name: "10_124".into(),
            matches: matches
                .into_iter()
                .map(|(form, mirror)| FormMatch {
                    form,
                    matched_by: Stage::Jones,
                    mirror,
                })
                .collect(),
        }
    }

    #[test]
    fn human_lines() {
        assert_eq!(report(vec![]).human_line(), "10 124");
        let r = report(vec![(ProbeForm::Form3 { k: 2, l: 0 }, false)]);
        assert_eq!(r.human_line(), "10 124 match form 3 for k=2, l=0");
        let r = report(vec![
            (ProbeForm::Form3 { k: 0, l: 1 }, false),
            (ProbeForm::Form5, false),
        ]);
        assert_eq!(r.human_line(), "10 124 form 5");
        let r = report(vec![
            (ProbeForm::Form1 { k: 0, l: 3 }, true),
            (ProbeForm::Form1 { k: 3, l: 0 }, false),
        ]);
        assert_eq!(r.human_line(), "10 124 match form 1 for k=3, l=0");
    }

    #[test]
    fn tsv() {
        assert_eq!(report(vec![]).tsv_rows(), vec!["10_124\t\t\t\truled_out"]);
        let r = report(vec![(ProbeForm::Form2 { k: 1, l: 2 }, true)]);
        assert_eq!(r.tsv_rows(), vec!["10_124\t2\t1\t2\tjones"]);
    }

    #[test]
    fn column_layout() {
        let lines: Vec<String> = ["a", "bb", "c", "d", "e"].map(String::from).to_vec();
        assert_eq!(columns(&lines, 2, 4), vec!["a   d", "bb  e", "c"]);
    }

    #[test]
    fn mirror_swaps_form_one() {
        assert_eq!(
            ProbeForm::Form1 { k: 3, l: 1 }.mirror(),
            ProbeForm::Form1 { k: 1, l: 3 }
        );
        assert_eq!(ProbeForm::Form5.mirror(), ProbeForm::Form5);
    }
}
