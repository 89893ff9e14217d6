use fivemove_core::link::{
    parse_conway, DTCode, Fraction, LinkDiagram, MontesinosDescriptor, Tangle,
};
use fivemove_core::{Error, Result};

/// Reads a link from one of the accepted notations:
///
/// * `M(1/2,-1/3;2)` Montesinos descriptor
/// * `dt: 4 8 -14 2 ...` Dowker-Thistlethwaite code
/// * `7/3` numerator closure of a rational tangle
/// * `(213,-4,22,40)` or `3 2` Conway notation
pub fn parse_link(text: &str) -> Result<LinkDiagram> {
    let text = text.trim();
    if text.starts_with('M') {
        return Ok(text.parse::<MontesinosDescriptor>()?.to_diagram());
    }
    if let Some(rest) = text
        .strip_prefix("dt:")
        .or_else(|| text.strip_prefix("DT:"))
    {
        let evens = rest
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>().map_err(|e| Error::Parse {
                    pos: 0,
                    msg: format!("bad DT entry {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        return DTCode::new("input", evens)?.to_diagram();
    }
    if text.contains('/') && !text.starts_with('(') {
        return Ok(Tangle::from_fraction(text.parse::<Fraction>()?).numerator());
    }
    Ok(parse_conway(text)?.to_montesinos()?.to_diagram())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notations() {
        assert_eq!(parse_link("M(-3)").unwrap().num_crossings(), 3);
        assert_eq!(parse_link("5/2").unwrap().num_crossings(), 4);
        assert_eq!(parse_link("dt: 4 6 2").unwrap().num_crossings(), 3);
        assert!(parse_link("dt: 4 6 3").is_err());
        assert!(parse_link("M(1/2").is_err());
    }
}
