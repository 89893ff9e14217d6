use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

use super::tangle::Tangle;

/// One crossing: four arc ids in counterclockwise order.
///
/// Slots 0 and 2 belong to the under strand, slots 1 and 3 to the over
/// strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [usize; 4],
}

/// An unoriented planar link diagram in PD form, plus crossingless
/// circles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// Direction choice for every half-edge: `true` when the strand leaves
/// the crossing through that slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    outgoing: Vec<bool>,
}

impl Orientation {
    pub fn is_outgoing(&self, half_edge: usize) -> bool {
        self.outgoing[half_edge]
    }
}

#[inline]
pub(crate) fn rot(h: usize) -> usize {
    (h & !3) | ((h + 1) & 3)
}

#[inline]
pub(crate) fn opposite(h: usize) -> usize {
    (h & !3) | ((h + 2) & 3)
}

impl LinkDiagram {
    /// Validates arc pairing and planarity.
    pub fn new(crossings: Vec<[usize; 4]>, free_loops: usize) -> Result<Self> {
        let d = LinkDiagram {
            crossings: crossings
                .into_iter()
                .map(|arcs| Crossing { arcs })
                .collect(),
            free_loops,
        };
        d.partners()?;
        if !d.is_planar() {
            return Err(Error::InvalidDiagram(
                "crossing rotations do not describe a planar diagram".into(),
            ));
        }
        Ok(d)
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `n` disjoint crossingless circles.
    pub fn unlink(n: usize) -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            free_loops: n,
        }
    }

    /// Builds a diagram from a half-edge involution; arc ids are assigned
    /// in order of first appearance, starting at 1.
    pub(crate) fn from_partners(partner: &[usize], free_loops: usize) -> Self {
        debug_assert!(partner.len().is_multiple_of(4));
        let mut arc = vec![0usize; partner.len()];
        let mut next = 1;
        for h in 0..partner.len() {
            if arc[h] == 0 {
                arc[h] = next;
                arc[partner[h]] = next;
                next += 1;
            }
        }
        let crossings = arc
            .chunks_exact(4)
            .map(|c| Crossing {
                arcs: [c[0], c[1], c[2], c[3]],
            })
            .collect();
        let d = LinkDiagram {
            crossings,
            free_loops,
        };
        debug_assert!(d.is_planar(), "non-planar diagram built internally");
        d
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Half-edge `4 i + k` is slot `k` of crossing `i`; returns the
    /// involution pairing the two ends of every arc.
    pub fn partners(&self) -> Result<Vec<usize>> {
        let mut first: HashMap<usize, usize> = HashMap::new();
        let mut partner = vec![usize::MAX; 4 * self.crossings.len()];
        for (i, c) in self.crossings.iter().enumerate() {
            for (k, &a) in c.arcs.iter().enumerate() {
                let h = 4 * i + k;
                match first.get(&a) {
                    Some(&g) if partner[g] == usize::MAX => {
                        partner[h] = g;
                        partner[g] = h;
                    }
                    Some(_) => {
                        return Err(Error::InvalidDiagram(format!(
                            "arc {a} occurs more than twice"
                        )))
                    }
                    None => {
                        first.insert(a, h);
                    }
                }
            }
        }
        if let Some(h) = partner.iter().position(|&g| g == usize::MAX) {
            let a = self.crossings[h / 4].arcs[h % 4];
            return Err(Error::InvalidDiagram(format!("arc {a} occurs only once")));
        }
        Ok(partner)
    }

    fn partners_unchecked(&self) -> Vec<usize> {
        self.partners()
            .expect("diagram was validated at construction")
    }

    /// Number of faces of the underlying 4-valent graph.
    pub fn face_count(&self) -> usize {
        let partner = self.partners_unchecked();
        let mut seen = vec![false; partner.len()];
        let mut faces = 0;
        for start in 0..partner.len() {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                h = rot(partner[h]);
            }
        }
        faces
    }

    /// Connected pieces of the 4-valent graph, ignoring free loops.
    pub fn graph_components(&self) -> usize {
        let partner = self.partners_unchecked();
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (h, &g) in partner.iter().enumerate() {
            let (a, b) = (find(&mut parent, h / 4), find(&mut parent, g / 4));
            if a != b {
                parent[a] = b;
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Euler check: each connected piece with `c` crossings must have
    /// `c + 2` faces on the sphere.
    pub fn is_planar(&self) -> bool {
        if self.partners().is_err() {
            return false;
        }
        self.face_count() == self.crossings.len() + 2 * self.graph_components()
    }

    /// Link components as cyclic lists of outgoing half-edges, followed by
    /// nothing for free loops (see [`LinkDiagram::component_count`]).
    pub fn strand_cycles(&self) -> Vec<Vec<usize>> {
        let partner = self.partners_unchecked();
        let mut seen = vec![false; partner.len()];
        let mut cycles = Vec::new();
        for start in 0..partner.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut h = start;
            loop {
                seen[h] = true;
                let arrive = partner[h];
                seen[arrive] = true;
                cyc.push(h);
                h = opposite(arrive);
                if h == start {
                    break;
                }
            }
            cycles.push(cyc);
        }
        cycles
    }

    pub fn component_count(&self) -> usize {
        self.strand_cycles().len() + self.free_loops
    }

    /// Orients each component so that it leaves through the lower-indexed
    /// end of its lowest arc id.
    pub fn default_orientation(&self) -> Orientation {
        let partner = self.partners_unchecked();
        let arc_of = |h: usize| self.crossings[h / 4].arcs[h % 4];
        let mut outgoing = vec![false; partner.len()];
        for cyc in self.strand_cycles() {
            let lowest = cyc
                .iter()
                .flat_map(|&h| [h, partner[h]])
                .min_by_key(|&h| (arc_of(h), h))
                .expect("cycles are nonempty");
            // walk starting from `lowest` treated as an outgoing end
            let mut h = lowest;
            loop {
                outgoing[h] = true;
                h = opposite(partner[h]);
                if h == lowest {
                    break;
                }
            }
        }
        Orientation { outgoing }
    }

    /// Reverses the components containing the given half-edges.
    pub fn reverse_component(&self, o: &Orientation, half_edge: usize) -> Orientation {
        let partner = self.partners_unchecked();
        let mut out = o.clone();
        let start = if o.outgoing[half_edge] {
            half_edge
        } else {
            partner[half_edge]
        };
        let mut h = start;
        loop {
            out.outgoing[h] = false;
            out.outgoing[partner[h]] = true;
            h = opposite(partner[h]);
            if h == start {
                break;
            }
        }
        out
    }

    /// Sign of crossing `i`: positive when the over strand leaves through
    /// the slot counterclockwise after the under strand's entry.
    pub fn crossing_sign(&self, i: usize, o: &Orientation) -> i32 {
        let base = 4 * i;
        let under_in = if o.outgoing[base] { 2 } else { 0 };
        let over_out = if o.outgoing[base + 1] { 1 } else { 3 };
        if over_out == (under_in + 1) % 4 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self, o: &Orientation) -> i32 {
        (0..self.crossings.len())
            .map(|i| self.crossing_sign(i, o))
            .sum()
    }

    /// Exchanges over and under at every crossing.
    pub fn mirror(&self) -> Self {
        LinkDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| {
                    let [a, b, x, d] = c.arcs;
                    Crossing { arcs: [b, x, d, a] }
                })
                .collect(),
            free_loops: self.free_loops,
        }
    }

    fn max_arc(&self) -> usize {
        self.crossings
            .iter()
            .flat_map(|c| c.arcs)
            .max()
            .unwrap_or(0)
    }

    pub fn disjoint_union(&self, other: &LinkDiagram) -> Self {
        let off = self.max_arc();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            arcs: c.arcs.map(|a| a + off),
        }));
        LinkDiagram {
            crossings,
            free_loops: self.free_loops + other.free_loops,
        }
    }

    /// Connected sum along arc `arc_a` of `self` and arc `arc_b` of
    /// `other`. A diagram without crossings contributes one of its circles.
    pub fn connected_sum(&self, arc_a: usize, other: &LinkDiagram, arc_b: usize) -> Result<Self> {
        if other.crossings.is_empty() || self.crossings.is_empty() {
            let (big, small) = if other.crossings.is_empty() {
                (self, other)
            } else {
                (other, self)
            };
            if small.free_loops == 0 {
                return Err(Error::InvalidDiagram(
                    "empty diagram in connected sum".into(),
                ));
            }
            let mut out = big.clone();
            out.free_loops += small.free_loops - 1;
            return Ok(out);
        }
        let pa = self.partners_unchecked();
        let pb = other.partners_unchecked();
        let find = |d: &LinkDiagram, arc: usize| {
            d.crossings
                .iter()
                .flat_map(|c| c.arcs)
                .position(|a| a == arc)
                .ok_or_else(|| Error::InvalidDiagram(format!("no arc {arc} in diagram")))
        };
        let h1 = find(self, arc_a)?;
        let h2 = find(other, arc_b)?;
        let off = pa.len();
        let mut partner: Vec<usize> = pa.clone();
        partner.extend(pb.iter().map(|&g| g + off));
        let (h1b, h2b) = (pa[h1], pb[h2] + off);
        let h2 = h2 + off;
        partner[h1] = h2b;
        partner[h2b] = h1;
        partner[h1b] = h2;
        partner[h2] = h1b;
        Ok(Self::from_partners(
            &partner,
            self.free_loops + other.free_loops,
        ))
    }

    /// Directed edges `h -> partner(h)` bordering each face, in order.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let partner = self.partners_unchecked();
        let mut seen = vec![false; partner.len()];
        let mut faces = Vec::new();
        for start in 0..partner.len() {
            if seen[start] {
                continue;
            }
            let mut f = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                f.push(h);
                h = rot(partner[h]);
            }
            faces.push(f);
        }
        faces
    }

    /// Replaces a trivial pair of arcs by a tangle.
    ///
    /// `h1` and `h2` must be directed edges of the same face (as listed by
    /// [`LinkDiagram::faces`]) lying on different arcs. The face sits
    /// between the two arcs in the middle of the tangle, `h1` running from
    /// NW to NE and `h2` from SE to SW.
    pub fn insert_tangle(&self, h1: usize, h2: usize, t: &Tangle) -> Result<Self> {
        let partner = self.partners_unchecked();
        let n = partner.len();
        if h1 >= n || h2 >= n || h1 == h2 || partner[h1] == h2 {
            return Err(Error::InvalidDiagram(
                "twist insertion needs two distinct arcs".into(),
            ));
        }
        let face = self
            .faces()
            .into_iter()
            .find(|f| f.contains(&h1))
            .expect("every half-edge lies on a face");
        if !face.contains(&h2) {
            return Err(Error::InvalidDiagram(
                "twist insertion arcs do not share a face".into(),
            ));
        }
        let ends = [h1, partner[h1], h2, partner[h2]];
        let tp = t.partners();
        let tn = t.half_edges();
        let mut out = partner.clone();
        out.extend(
            tp[..tn]
                .iter()
                .map(|&g| if g < tn { g + n } else { usize::MAX }),
        );
        for (x, &d) in ends.iter().enumerate() {
            let a = tp[tn + x];
            if a >= tn {
                out[d] = ends[a - tn];
            } else {
                out[d] = a + n;
                out[a + n] = d;
            }
        }
        Ok(Self::from_partners(&out, self.free_loops + t.loops()))
    }

    /// Inserts `k` half-twists between the two arcs (see
    /// [`LinkDiagram::insert_tangle`]).
    pub fn insert_twists(&self, h1: usize, h2: usize, k: i64) -> Result<Self> {
        self.insert_tangle(h1, h2, &Tangle::integer(k))
    }
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PD[")?;
        for (i, c) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let [a, b, x, d] = c.arcs;
            write!(f, "X[{a},{b},{x},{d}]")?;
        }
        write!(f, "]")?;
        if self.free_loops > 0 {
            write!(f, " + {} loop(s)", self.free_loops)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LinkDiagram {
        LinkDiagram::new(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], 0).unwrap()
    }

    #[test]
    fn arc_pairing_is_enforced() {
        assert!(LinkDiagram::new(vec![[1, 2, 3, 4]], 0).is_err());
        assert!(LinkDiagram::new(vec![[1, 1, 2, 2]], 0).is_ok());
    }

    #[test]
    fn planarity() {
        let t = trefoil();
        assert_eq!(t.face_count(), 5);
        assert!(t.is_planar());
        // two crossings glued as a figure that cannot be drawn
        assert!(LinkDiagram::new(vec![[1, 2, 3, 4], [1, 3, 2, 4]], 0).is_err());
    }

    #[test]
    fn trefoil_is_positive() {
        let t = trefoil();
        let o = t.default_orientation();
        assert_eq!(t.writhe(&o), 3);
        assert_eq!(t.mirror().writhe(&t.mirror().default_orientation()), -3);
        assert_eq!(t.component_count(), 1);
        let r = t.reverse_component(&o, 0);
        assert_eq!(t.writhe(&r), 3);
    }

    #[test]
    fn sums_and_unions() {
        let t = trefoil();
        let u = t.disjoint_union(&LinkDiagram::unknot());
        assert_eq!(u.component_count(), 2);
        let s = t.connected_sum(1, &t, 2).unwrap();
        assert_eq!(s.num_crossings(), 6);
        assert!(s.is_planar());
        assert_eq!(s.component_count(), 1);
        let s = t.connected_sum(1, &LinkDiagram::unknot(), 0).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn twist_insertion_keeps_planarity() {
        let t = trefoil();
        for f in t.faces() {
            for &a in &f {
                for &b in &f {
                    if let Ok(d) = t.insert_twists(a, b, 5) {
                        assert!(d.is_planar(), "{a} {b}");
                        assert_eq!(d.num_crossings(), 8);
                    }
                }
            }
        }
    }
}
