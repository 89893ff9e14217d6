use crate::error::{Error, Result};

use super::diagram::LinkDiagram;

/// Largest code accepted by [`dt_to_diagram`]; realization tries every
/// rotation choice.
pub const MAX_DT_CROSSINGS: usize = 20;

/// A Dowker-Thistlethwaite code: `evens[i]` is paired with the odd label
/// `2i + 1`. A positive entry means the strand is under at the even label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DTCode {
    pub name: String,
    pub evens: Vec<i64>,
}

impl DTCode {
    pub fn new(name: impl Into<String>, evens: Vec<i64>) -> Result<Self> {
        let c = evens.len();
        let mut seen = vec![false; c];
        for &e in &evens {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a % 2 == 1 || a > 2 * c || seen[a / 2 - 1] {
                return Err(Error::InvalidDiagram(format!(
                    "DT entries must be a signed permutation of 2, 4, ..., {}",
                    2 * c
                )));
            }
            seen[a / 2 - 1] = true;
        }
        Ok(DTCode {
            name: name.into(),
            evens,
        })
    }

    pub fn crossings(&self) -> usize {
        self.evens.len()
    }

    pub fn to_diagram(&self) -> Result<LinkDiagram> {
        dt_to_diagram(self)
    }
}

/// Realizes the code as a planar diagram, trying both local rotations at
/// every crossing but the first and keeping the first planar one.
pub fn dt_to_diagram(code: &DTCode) -> Result<LinkDiagram> {
    let c = code.evens.len();
    if c == 0 {
        return Ok(LinkDiagram::unknot());
    }
    if c > MAX_DT_CROSSINGS {
        return Err(Error::TooLarge {
            crossings: c,
            cap: MAX_DT_CROSSINGS,
        });
    }
    let n = 2 * c;
    // arc j runs from label j to label j + 1; label 1 is entered by arc n
    let arc_in = |label: usize| if label == 1 { n } else { label - 1 };
    let strands: Vec<[(usize, usize); 2]> = code
        .evens
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let odd = 2 * i + 1;
            let even = e.unsigned_abs() as usize;
            let odd_pass = (arc_in(odd), odd);
            let even_pass = (arc_in(even), even);
            // [under, over]
            if e > 0 {
                [even_pass, odd_pass]
            } else {
                [odd_pass, even_pass]
            }
        })
        .collect();
    for mask in 0u32..(1 << (c - 1)) {
        let crossings: Vec<[usize; 4]> = strands
            .iter()
            .enumerate()
            .map(|(i, &[(ui, uo), (vi, vo)])| {
                let flip = i > 0 && mask & (1 << (i - 1)) != 0;
                if flip {
                    [ui, vi, uo, vo]
                } else {
                    [ui, vo, uo, vi]
                }
            })
            .collect();
        if let Ok(d) = LinkDiagram::new(crossings, 0) {
            return Ok(d);
        }
    }
    Err(Error::NotRealizable(format!(
        "no planar embedding for {}",
        if code.name.is_empty() {
            "DT code"
        } else {
            &code.name
        }
    )))
}

/// Reads lines `<name> <c> <dt_1> ... <dt_c>`; `#` starts a comment.
pub fn parse_dt_table(text: &str) -> Result<Vec<DTCode>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let content = line.split('#').next().unwrap_or("");
        let mut words = content.split_whitespace();
        if let Some(name) = words.next() {
            let bad = |msg: String| Error::parse(offset, msg);
            let c: usize = words
                .next()
                .ok_or_else(|| bad(format!("{name}: missing crossing count")))?
                .parse()
                .map_err(|_| bad(format!("{name}: bad crossing count")))?;
            let evens = words
                .map(|w| {
                    w.parse::<i64>()
                        .map_err(|_| bad(format!("{name}: bad entry {w:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if evens.len() != c {
                return Err(bad(format!(
                    "{name}: expected {c} entries, found {}",
                    evens.len()
                )));
            }
            out.push(DTCode::new(name, evens)?);
        }
        offset += line.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_knots() {
        let t = dt_to_diagram(&DTCode::new("3_1", vec![4, 6, 2]).unwrap()).unwrap();
        assert_eq!(t.num_crossings(), 3);
        assert_eq!(t.component_count(), 1);
        let f = dt_to_diagram(&DTCode::new("4_1", vec![4, 6, 8, 2]).unwrap()).unwrap();
        assert!(f.is_planar());
        let u = dt_to_diagram(&DTCode::new("0_1", vec![]).unwrap()).unwrap();
        assert_eq!(u, LinkDiagram::unknot());
    }

    #[test]
    fn invalid_codes() {
        assert!(DTCode::new("x", vec![4, 4, 2]).is_err());
        assert!(DTCode::new("x", vec![3, 6, 2]).is_err());
        let c = DTCode::new("x", vec![4, 6, 8, 10, 2]).unwrap();
        assert!(matches!(dt_to_diagram(&c), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn table_format() {
        let t = parse_dt_table("# knots\n3_1 3 4 6 2\n\n4_1 4 4 6 8 2 # amphichiral\n").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[1].evens, vec![4, 6, 8, 2]);
        assert!(parse_dt_table("3_1 3 4 6").is_err());
    }
}
