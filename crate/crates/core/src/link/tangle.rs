use super::diagram::LinkDiagram;
use super::fraction::{cf_from_fraction, ContinuedFraction, Fraction};

/// Boundary points of a tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corner {
    NW = 0,
    NE = 1,
    SE = 2,
    SW = 3,
}

use Corner::*;

const DEAD: usize = usize::MAX;

/// A planar 4-ended tangle.
///
/// Points `0..4n` are crossing slots (as in [`LinkDiagram`]), points
/// `4n..4n+4` are the corners NW, NE, SE, SW. `partner` pairs the two ends
/// of every arc; a corner may be paired with another corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangle {
    partner: Vec<usize>,
    loops: usize,
}

impl Tangle {
    fn from_corner_slots(slots: [Corner; 4]) -> Self {
        let mut partner = vec![0; 8];
        for (k, c) in slots.iter().enumerate() {
            let port = 4 + *c as usize;
            partner[k] = port;
            partner[port] = k;
        }
        Tangle { partner, loops: 0 }
    }

    /// A single crossing. For `+1` the NE-SW strand is over and its
    /// A-smoothing is the `∞` tangle; `-1` is its mirror image.
    pub fn crossing(positive: bool) -> Self {
        if positive {
            Self::from_corner_slots([NW, SW, SE, NE])
        } else {
            Self::from_corner_slots([NE, NW, SW, SE])
        }
    }

    fn arcs(pairs: [(Corner, Corner); 2]) -> Self {
        let mut partner = vec![0; 4];
        for (a, b) in pairs {
            partner[a as usize] = b as usize;
            partner[b as usize] = a as usize;
        }
        Tangle { partner, loops: 0 }
    }

    /// Horizontal arcs NW-NE and SW-SE.
    pub fn zero() -> Self {
        Self::arcs([(NW, NE), (SW, SE)])
    }

    /// Vertical arcs NW-SW and NE-SE.
    pub fn infinity() -> Self {
        Self::arcs([(NW, SW), (NE, SE)])
    }

    /// `|n|` horizontal half-twists of sign `n`.
    pub fn integer(n: i64) -> Self {
        let unit = Self::crossing(n > 0);
        (0..n.unsigned_abs()).fold(Self::zero(), |acc, _| acc.sum(&unit))
    }

    /// The rational tangle `T1 = [c1]`, `Ti = flip(T(i-1)) + [ci]`.
    pub fn rational(cf: &ContinuedFraction) -> Self {
        cf.entries
            .iter()
            .fold(Self::infinity(), |t, &c| t.flip().sum(&Self::integer(c)))
    }

    pub fn from_fraction(f: Fraction) -> Self {
        Self::rational(&cf_from_fraction(f))
    }

    pub fn num_crossings(&self) -> usize {
        (self.partner.len() - 4) / 4
    }

    pub(crate) fn half_edges(&self) -> usize {
        self.partner.len() - 4
    }

    pub(crate) fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Closed circles lying inside the tangle.
    pub fn loops(&self) -> usize {
        self.loops
    }

    fn port(&self, c: Corner) -> usize {
        self.half_edges() + c as usize
    }

    /// Reflection in the NW-SE diagonal, sending fraction `x` to `1/x`.
    pub fn flip(&self) -> Self {
        let n = self.half_edges();
        let map = |x: usize| -> usize {
            if x < n {
                match x % 4 {
                    1 => x + 2,
                    3 => x - 2,
                    _ => x,
                }
            } else {
                match x - n {
                    1 => n + 3,
                    3 => n + 1,
                    _ => x,
                }
            }
        };
        let mut partner = vec![0; self.partner.len()];
        for (x, &y) in self.partner.iter().enumerate() {
            partner[map(x)] = map(y);
        }
        Tangle {
            partner,
            loops: self.loops,
        }
    }

    /// Horizontal sum: NE and SE of `self` are joined to NW and SW of
    /// `other`.
    pub fn sum(&self, other: &Tangle) -> Self {
        let (na, nb) = (self.half_edges(), other.half_edges());
        let n = na + nb;
        let mut p = vec![DEAD; n + 8];
        let ma = |x: usize| if x < na { x } else { n + (x - na) };
        let mb = |x: usize| if x < nb { na + x } else { n + 4 + (x - nb) };
        for (x, &y) in self.partner.iter().enumerate() {
            p[ma(x)] = ma(y);
        }
        for (x, &y) in other.partner.iter().enumerate() {
            p[mb(x)] = mb(y);
        }
        let mut loops = self.loops + other.loops;
        glue(&mut p, &mut loops, n + NE as usize, n + 4 + NW as usize);
        glue(&mut p, &mut loops, n + SE as usize, n + 4 + SW as usize);
        let remap = |x: usize| -> usize {
            if x < n {
                x
            } else {
                match x - n {
                    0 => n,
                    5 => n + 1,
                    6 => n + 2,
                    3 => n + 3,
                    _ => unreachable!("glued corner still referenced"),
                }
            }
        };
        let mut partner = vec![0; n + 4];
        for x in (0..n).chain([n, n + 5, n + 6, n + 3]) {
            partner[remap(x)] = remap(p[x]);
        }
        Tangle { partner, loops }
    }

    fn close(&self, pairs: [(Corner, Corner); 2]) -> LinkDiagram {
        let n = self.half_edges();
        let mut p = self.partner.clone();
        let mut loops = self.loops;
        for (a, b) in pairs {
            glue(&mut p, &mut loops, self.port(a), self.port(b));
        }
        p.truncate(n);
        LinkDiagram::from_partners(&p, loops)
    }

    /// Numerator closure: NW-NE and SW-SE joined.
    pub fn numerator(&self) -> LinkDiagram {
        self.close([(NW, NE), (SW, SE)])
    }

    /// Denominator closure: NW-SW and NE-SE joined.
    pub fn denominator(&self) -> LinkDiagram {
        self.close([(NW, SW), (NE, SE)])
    }
}

/// Joins endpoint `x` to endpoint `y`, removing both from the point set.
fn glue(p: &mut [usize], loops: &mut usize, x: usize, y: usize) {
    let (a, b) = (p[x], p[y]);
    if a == y {
        *loops += 1;
    } else {
        p[a] = b;
        p[b] = a;
    }
    p[x] = DEAD;
    p[y] = DEAD;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closures_of_trivial_tangles() {
        assert_eq!(Tangle::zero().numerator(), LinkDiagram::unlink(2));
        assert_eq!(Tangle::zero().denominator(), LinkDiagram::unknot());
        assert_eq!(Tangle::infinity().numerator(), LinkDiagram::unknot());
        assert_eq!(Tangle::infinity().denominator(), LinkDiagram::unlink(2));
        assert_eq!(Tangle::zero().flip(), Tangle::infinity());
    }

    #[test]
    fn twist_closures() {
        let t = Tangle::integer(3).numerator();
        assert_eq!(t.num_crossings(), 3);
        assert_eq!(t.component_count(), 1);
        assert!(t.is_planar());
        let h = Tangle::integer(2).numerator();
        assert_eq!(h.component_count(), 2);
        let u = Tangle::integer(4).denominator();
        assert_eq!(u.component_count(), 1);
        assert!(u.is_planar());
    }

    #[test]
    fn single_crossing_flip_is_itself() {
        assert_eq!(Tangle::crossing(true).flip(), Tangle::crossing(true));
        let t = Tangle::integer(-3).sum(&Tangle::integer(2).flip());
        assert_eq!(t.flip().flip(), t);
    }
}
