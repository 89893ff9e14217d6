use crate::error::{Error, Result};

use super::fraction::{cf_value, ContinuedFraction};
use super::montesinos::MontesinosDescriptor;

/// A Montesinos link in Conway notation: rational tangles and the integer
/// part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConwayNotation {
    pub tangles: Vec<ContinuedFraction>,
    pub integer_part: i64,
}

impl ConwayNotation {
    /// Each tangle `T` with fraction `x` contributes the factor `1/x`.
    pub fn to_montesinos(&self) -> Result<MontesinosDescriptor> {
        let mut factors = Vec::new();
        let mut e = self.integer_part;
        for cf in &self.tangles {
            let x = cf_value(cf)?.recip();
            if x.is_infinite() {
                return Err(Error::InvalidFraction {
                    p: 1,
                    q: 0,
                    msg: "tangle with fraction 0 in a Montesinos sum".into(),
                });
            }
            // split off the integer part so that 0 < |q| < p
            let (q, p) = (x.p(), x.q());
            let whole = q / p;
            let rest = q % p;
            e += whole;
            if rest != 0 {
                factors.push((rest, p));
            }
        }
        MontesinosDescriptor::new(factors, e)
    }
}

/// Parses `(213,-4,22,40)`.
///
/// A group without spaces lists one single-digit entry per character, an
/// optional leading `-` negating all of them. A group containing spaces
/// lists whitespace-separated integers, e.g. `12 3`. A final group of two
/// entries ending in `0` (written `e0`) is the integer part `e`.
pub fn parse_conway(text: &str) -> Result<ConwayNotation> {
    let trimmed_start = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut offset = trimmed_start;
    if let Some(rest) = body.strip_prefix('(') {
        body = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(text.trim_end().len(), "missing closing parenthesis"))?;
        offset += 1;
    }
    if body.trim().is_empty() {
        return Err(Error::parse(offset, "empty Conway notation"));
    }
    let mut groups = Vec::new();
    let mut pos = offset;
    for raw in body.split(',') {
        groups.push(parse_group(raw, pos)?);
        pos += raw.len() + 1;
    }
    let mut integer_part = 0;
    if let Some(last) = groups.last() {
        if last.len() == 2 && last[1] == 0 {
            integer_part = last[0];
            groups.pop();
        }
    }
    Ok(ConwayNotation {
        tangles: groups.into_iter().map(ContinuedFraction::new).collect(),
        integer_part,
    })
}

fn parse_group(raw: &str, pos: usize) -> Result<Vec<i64>> {
    let lead = raw.len() - raw.trim_start().len();
    let g = raw.trim();
    let at = pos + lead;
    if g.is_empty() {
        return Err(Error::parse(at, "empty tangle group"));
    }
    if g.contains(char::is_whitespace) {
        return g
            .split_whitespace()
            .map(|w| {
                w.parse::<i64>()
                    .map_err(|_| Error::parse(at, format!("bad entry {w:?}")))
            })
            .collect();
    }
    let (sign, digits, skip) = match g.strip_prefix('-') {
        Some(d) => (-1, d, 1),
        None => (1, g, 0),
    };
    if digits.is_empty() {
        return Err(Error::parse(at, "sign without digits"));
    }
    digits
        .chars()
        .enumerate()
        .map(|(i, ch)| {
            ch.to_digit(10)
                .map(|d| sign * d as i64)
                .ok_or_else(|| Error::parse(at + skip + i, format!("unexpected character {ch:?}")))
        })
        .collect()
}
