use rustc_hash::FxHashMap;

use crate::cyclo::{CycloInt, QuotientElement};
use crate::error::{Error, Result};
use crate::link::LinkDiagram;

use super::point::{EvalPoint, RingPoint};

/// Default crossing cap for the skein recursion.
pub const DEFAULT_SKEIN_CAP: usize = 14;

const NONE: u32 = u32::MAX;

/// Half-edge `4 c + k` is slot `k` of crossing `c`, as in [`LinkDiagram`].
/// A crossing with `flip` set has its over strand on slots 0 and 2, so
/// switching never moves a half-edge.
#[derive(Clone, Debug)]
struct Pd {
    partner: Vec<u32>,
    flip: Vec<bool>,
}

#[inline]
fn opp(h: u32) -> u32 {
    (h & !3) | ((h + 2) & 3)
}

impl Pd {
    fn crossings(&self) -> usize {
        self.partner.len() / 4
    }

    fn is_over(&self, h: u32) -> bool {
        (h & 1 == 1) != self.flip[(h / 4) as usize]
    }

    /// Deletes the crossings `cs`, routing each strand that enters one of
    /// them through `mate` until it leaves. Returns the diagram and the
    /// number of closed circles that lay entirely inside.
    fn splice(&self, cs: &[usize], mate: impl Fn(u32) -> u32) -> (Pd, u32) {
        let inside = |h: u32| cs.contains(&((h / 4) as usize));
        let mut partner = self.partner.clone();
        let mut visited: Vec<u32> = Vec::with_capacity(4 * cs.len());
        for x in 0..self.partner.len() as u32 {
            if inside(x) || !inside(self.partner[x as usize]) {
                continue;
            }
            let mut y = self.partner[x as usize];
            loop {
                let m = mate(y);
                visited.extend([y, m]);
                let z = self.partner[m as usize];
                if !inside(z) {
                    partner[x as usize] = z;
                    break;
                }
                y = z;
            }
        }
        let mut loops = 0;
        for &c in cs {
            for h in 4 * c as u32..4 * c as u32 + 4 {
                if visited.contains(&h) {
                    continue;
                }
                let mut y = h;
                loop {
                    let m = mate(y);
                    visited.extend([y, m]);
                    y = self.partner[m as usize];
                    if y == h {
                        break;
                    }
                }
                loops += 1;
            }
        }
        (self.remove(partner, cs), loops)
    }

    /// Replaces crossing `c` by the smoothing joining slots `(0,1),(2,3)`
    /// when `a_side`, else `(0,3),(1,2)`.
    fn smooth(&self, c: usize, a_side: bool) -> (Pd, u32) {
        let a_side = a_side != self.flip[c];
        self.splice(&[c], |h| {
            let k = h & 3;
            (h & !3) | if a_side { k ^ 1 } else { 3 - k }
        })
    }

    /// Drops the half-edges of the crossings `cs`; no remaining partner
    /// may point into them.
    fn remove(&self, partner: Vec<u32>, cs: &[usize]) -> Pd {
        let n = self.crossings();
        let mut index = vec![NONE; n];
        let mut next = 0;
        for (c, slot) in index.iter_mut().enumerate() {
            if !cs.contains(&c) {
                *slot = next;
                next += 1;
            }
        }
        let mut out = Vec::with_capacity(partner.len() - 4 * cs.len());
        let mut flip = Vec::with_capacity(n - cs.len());
        for c in 0..n {
            if index[c] == NONE {
                continue;
            }
            flip.push(self.flip[c]);
            for &p in &partner[4 * c..4 * c + 4] {
                debug_assert!(index[(p / 4) as usize] != NONE);
                out.push(4 * index[(p / 4) as usize] + (p & 3));
            }
        }
        Pd { partner: out, flip }
    }

    /// Exchanges over and under at crossing `c`.
    fn switch(&self, c: usize) -> Pd {
        let mut out = self.clone();
        out.flip[c] = !out.flip[c];
        out
    }

    /// The same diagram with every flipped crossing relabeled so that its
    /// under strand is on slots 0 and 2 again.
    fn unflipped(&self) -> Pd {
        let relabel = |h: u32| {
            if self.flip[(h / 4) as usize] {
                (h & !3) | ((h + 3) & 3)
            } else {
                h
            }
        };
        let mut partner = vec![0; self.partner.len()];
        for (h, &p) in self.partner.iter().enumerate() {
            partner[relabel(h as u32) as usize] = relabel(p);
        }
        Pd {
            partner,
            flip: vec![false; self.flip.len()],
        }
    }

    /// Finds a kink: two cyclically adjacent slots `k, k+1` of one
    /// crossing joined by an arc. Returns the crossing, `k`, and whether
    /// the kink lies on the side of the `(0,1),(2,3)` smoothing of an
    /// unflipped crossing.
    fn find_curl(&self) -> Option<(usize, u32, bool)> {
        self.partner.iter().enumerate().find_map(|(h, &p)| {
            let h = h as u32;
            let c = (h / 4) as usize;
            (h / 4 == p / 4 && (h + 1) & 3 == p & 3).then_some((
                c,
                h & 3,
                (h & 1 == 0) != self.flip[c],
            ))
        })
    }

    /// Removes the kink at `c`, joining the two remaining slots.
    fn uncurl(&self, c: usize, first: u32) -> (Pd, u32) {
        let base = 4 * c as u32;
        let (x, y) = (base + ((first + 2) & 3), base + ((first + 3) & 3));
        let (px, py) = (self.partner[x as usize], self.partner[y as usize]);
        let mut partner = self.partner.clone();
        if px == y {
            return (self.remove(partner, &[c]), 1);
        }
        partner[px as usize] = py;
        partner[py as usize] = px;
        (self.remove(partner, &[c]), 0)
    }

    /// Finds two crossings bounding a bigon whose two edges are each over
    /// at both ends or under at both ends.
    fn find_bigon(&self) -> Option<(usize, usize)> {
        self.bigon(true)
    }

    /// A crossing of a twist-region bigon, where switching it creates a
    /// removable bigon.
    fn find_twist(&self) -> Option<usize> {
        self.bigon(false).map(|(c, _)| c)
    }

    fn bigon(&self, removable: bool) -> Option<(usize, usize)> {
        for h in 0..self.partner.len() as u32 {
            let p = self.partner[h as usize];
            if p / 4 == h / 4 || (self.is_over(h) == self.is_over(p)) != removable {
                continue;
            }
            let g = self.partner[((p & !3) | ((p + 1) & 3)) as usize];
            if (g & !3) | ((g + 1) & 3) == h {
                return Some(((h / 4) as usize, (p / 4) as usize));
            }
        }
        None
    }

    /// Connected components of the crossing graph, as sorted crossing
    /// lists.
    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.crossings();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut stack = vec![s];
            let mut members = Vec::new();
            while let Some(c) = stack.pop() {
                members.push(c);
                for k in 0..4 {
                    let d = (self.partner[4 * c + k] / 4) as usize;
                    if comp[d] == usize::MAX {
                        comp[d] = id;
                        stack.push(d);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn restrict(&self, members: &[usize]) -> Pd {
        let mut index = vec![NONE; self.crossings()];
        for (i, &c) in members.iter().enumerate() {
            index[c] = i as u32;
        }
        let mut partner = Vec::with_capacity(4 * members.len());
        for &c in members {
            for k in 0..4 {
                let p = self.partner[4 * c + k];
                partner.push(4 * index[(p / 4) as usize] + (p & 3));
            }
        }
        let flip = members.iter().map(|&c| self.flip[c]).collect();
        Pd { partner, flip }
    }

    /// Lexicographically least relabeling over all roots; assumes a
    /// connected crossing graph. Crossings are numbered in breadth-first
    /// order and each is rotated by 0 or 2 so that its entry slot
    /// becomes 0 or 1.
    fn canonical_code(&self) -> Vec<u32> {
        let n = self.crossings();
        let mut best: Option<Vec<u32>> = None;
        let mut index = vec![NONE; n];
        let mut offset = vec![0u32; n];
        let mut order = Vec::with_capacity(n);
        let mut code = Vec::with_capacity(4 * n);
        for root in 0..n {
            for root_off in [0u32, 2] {
                index.fill(NONE);
                order.clear();
                code.clear();
                index[root] = 0;
                offset[root] = root_off;
                order.push(root);
                let mut i = 0;
                let mut worse = false;
                let mut tied = best.is_some();
                while i < order.len() {
                    let c = order[i];
                    for k in 0..4u32 {
                        let old = 4 * c as u32 + ((k + offset[c]) & 3);
                        let p = self.partner[old as usize];
                        let d = (p / 4) as usize;
                        if index[d] == NONE {
                            index[d] = order.len() as u32;
                            offset[d] = p & 2;
                            order.push(d);
                        }
                        let slot = ((p & 3) + 4 - offset[d]) & 3;
                        code.push(4 * index[d] + slot);
                        if tied {
                            let b = best.as_ref().expect("tied implies a best code");
                            let j = code.len() - 1;
                            if code[j] > b[j] {
                                worse = true;
                                break;
                            }
                            tied = code[j] == b[j];
                        }
                    }
                    if worse {
                        break;
                    }
                    i += 1;
                }
                if !worse && best.as_ref().is_none_or(|b| code < *b) {
                    let spare = best.replace(std::mem::take(&mut code));
                    code = spare.unwrap_or_else(|| Vec::with_capacity(4 * n));
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Strand cycles as lists of outgoing half-edges.
    fn strands(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.partner.len()];
        let mut out = Vec::new();
        for start in 0..self.partner.len() as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut h = start;
            loop {
                seen[h as usize] = true;
                let arrive = self.partner[h as usize];
                seen[arrive as usize] = true;
                cycle.push(h);
                h = opp(arrive);
                if h == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// Chooses a base point and direction on every strand, and a stacking
    /// order of strands, minimizing the number of crossings first reached
    /// from below. Returns the first such crossing, or the writhe when
    /// there is none.
    fn descending_check(&self) -> std::result::Result<i64, usize> {
        let strands = self.strands();
        let n = self.crossings();
        let mut strand_of = vec![0usize; self.partner.len()];
        for (i, cyc) in strands.iter().enumerate() {
            for &h in cyc {
                strand_of[h as usize] = i;
                strand_of[self.partner[h as usize] as usize] = i;
            }
        }
        // best start for each strand, by self-crossings reached from below
        let mut starts = Vec::with_capacity(strands.len());
        let mut reached = vec![false; n];
        for cyc in &strands {
            let mut best = (usize::MAX, 0u32, false);
            for (i, &h0) in cyc.iter().enumerate() {
                for reverse in [false, true] {
                    let start = if reverse {
                        self.partner[cyc[(i + cyc.len() - 1) % cyc.len()] as usize]
                    } else {
                        h0
                    };
                    let bad = self.walk(start, &mut reached).len();
                    for &h in cyc {
                        reached[(h / 4) as usize] = false;
                        reached[(self.partner[h as usize] / 4) as usize] = false;
                    }
                    if bad < best.0 {
                        best = (bad, start, reverse);
                    }
                }
            }
            starts.push(best.1);
        }
        let k = strands.len();
        let mut over_count = vec![vec![0u32; k]; k];
        for c in 0..n {
            let f = usize::from(self.flip[c]);
            let (u, o) = (strand_of[4 * c + f], strand_of[4 * c + 1 - f]);
            if u != o {
                over_count[o][u] += 1;
            }
        }
        let order = stacking_order(&over_count);
        reached.fill(false);
        let mut outgoing = vec![false; self.partner.len()];
        for &i in &order {
            let bad = self.walk(starts[i], &mut reached);
            if let Some(&c) = bad.first() {
                return Err(c);
            }
            let mut h = starts[i];
            loop {
                outgoing[h as usize] = true;
                h = opp(self.partner[h as usize]);
                if h == starts[i] {
                    break;
                }
            }
        }
        let mut w = 0;
        for c in 0..n {
            let base = 4 * c;
            let under_in = if outgoing[base] { 2 } else { 0 };
            let over_out = if outgoing[base + 1] { 1 } else { 3 };
            let positive = (over_out == (under_in + 1) % 4) != self.flip[c];
            w += if positive { 1 } else { -1 };
        }
        Ok(w)
    }

    /// Walks one strand leaving through `start`, marking crossings in
    /// `reached`; returns the crossings first reached from below.
    fn walk(&self, start: u32, reached: &mut [bool]) -> Vec<usize> {
        let mut bad = Vec::new();
        let mut h = start;
        loop {
            let arrive = self.partner[h as usize];
            let c = (arrive / 4) as usize;
            if !reached[c] {
                reached[c] = true;
                if !self.is_over(arrive) {
                    bad.push(c);
                }
            }
            h = opp(arrive);
            if h == start {
                break;
            }
        }
        bad
    }
}

/// Evaluates `Λ` at one point, memoizing connected kink-free
/// sub-diagrams by canonical code.
pub struct LambdaEngine {
    pt: RingPoint,
    cap: usize,
    memo: FxHashMap<Vec<u32>, CycloInt>,
}

impl LambdaEngine {
    pub fn new(pt: &EvalPoint, cap: usize) -> Self {
        LambdaEngine {
            pt: pt.ring,
            cap,
            memo: FxHashMap::default(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn eval(&mut self, d: &LinkDiagram) -> Result<QuotientElement> {
        let n = d.num_crossings();
        if n > self.cap {
            return Err(Error::TooLarge {
                crossings: n,
                cap: self.cap,
            });
        }
        if n == 0 && d.free_loops() == 0 {
            return Err(Error::InvalidDiagram("empty diagram".into()));
        }
        let partner = d.partners()?.into_iter().map(|p| p as u32).collect();
        let pd = Pd {
            partner,
            flip: vec![false; n],
        };
        let v = self.eval_pd(pd, d.free_loops() as u32);
        Ok(v.to_quotient())
    }

    fn a_pow(&self, k: i64) -> CycloInt {
        if k >= 0 {
            self.pt.a.pow(k as u32)
        } else {
            self.pt.a_inv.pow((-k) as u32)
        }
    }

    /// `Λ` of a diagram together with `loops` separate circles.
    fn eval_pd(&mut self, mut pd: Pd, mut loops: u32) -> CycloInt {
        let mut curls = 0i64;
        loop {
            let (next, extra) = if let Some((c, first, a_side)) = pd.find_curl() {
                // a kink on the A side of the bracket contributes 1/a
                curls += if a_side { -1 } else { 1 };
                pd.uncurl(c, first)
            } else if let Some((c, d)) = pd.find_bigon() {
                pd.splice(&[c, d], opp)
            } else {
                break;
            };
            pd = next;
            loops += extra;
        }
        let comps = pd.components();
        let pieces = comps.len() as u32 + loops;
        let mut acc = self.a_pow(curls) * self.pt.t2.pow(pieces.saturating_sub(1));
        if comps.len() == 1 {
            acc = acc * self.eval_connected(pd);
        } else {
            for members in comps {
                acc = acc * self.eval_connected(pd.restrict(&members));
            }
        }
        acc
    }

    fn eval_connected(&mut self, pd: Pd) -> CycloInt {
        let key = pd.unflipped().canonical_code();
        if let Some(v) = self.memo.get(&key) {
            return *v;
        }
        let v = match pd.descending_check() {
            Ok(w) => self.a_pow(-w) * self.pt.t2.pow(strand_count(&pd) - 1),
            Err(c) => {
                // every branch at a twist crossing loses crossings
                let c = pd.find_twist().unwrap_or(c);
                let switched = self.eval_pd(pd.switch(c), 0);
                let (s0, l0) = pd.smooth(c, true);
                let (s1, l1) = pd.smooth(c, false);
                let v0 = self.eval_pd(s0, l0);
                let v1 = self.eval_pd(s1, l1);
                self.pt.z * (v0 + v1) - switched
            }
        };
        self.memo.insert(key, v);
        v
    }
}

/// Strands up to this many are stacked in an optimal order; larger sets
/// keep their given order.
const MAX_EXACT_STACK: usize = 14;

/// An order of strands, top first, minimizing the number of crossings
/// where a lower strand passes over a higher one. `over[i][j]` counts
/// crossings with `i` over `j`.
fn stacking_order(over: &[Vec<u32>]) -> Vec<usize> {
    let k = over.len();
    if k > MAX_EXACT_STACK {
        return (0..k).collect();
    }
    let full = (1usize << k) - 1;
    let mut best = vec![(u32::MAX, 0usize); full + 1];
    best[0] = (0, 0);
    for mask in 0..full {
        let (cost, _) = best[mask];
        if cost == u32::MAX {
            continue;
        }
        for x in (0..k).filter(|&x| mask & (1 << x) == 0) {
            let added: u32 = (0..k)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| over[x][i])
                .sum();
            let next = mask | (1 << x);
            if cost + added < best[next].0 {
                best[next] = (cost + added, x);
            }
        }
    }
    let mut order = Vec::with_capacity(k);
    let mut mask = full;
    while mask != 0 {
        let x = best[mask].1;
        order.push(x);
        mask &= !(1 << x);
    }
    order.reverse();
    order
}

fn strand_count(pd: &Pd) -> u32 {
    let mut seen = vec![false; pd.partner.len()];
    let mut count = 0;
    for start in 0..pd.partner.len() as u32 {
        if seen[start as usize] {
            continue;
        }
        count += 1;
        let mut h = start;
        loop {
            seen[h as usize] = true;
            let arrive = pd.partner[h as usize];
            seen[arrive as usize] = true;
            h = opp(arrive);
            if h == start {
                break;
            }
        }
    }
    count
}

/// Exact value of the regular-isotopy Kauffman polynomial `Λ` at a point.
pub fn lambda_eval(d: &LinkDiagram, pt: &EvalPoint) -> Result<QuotientElement> {
    lambda_eval_with(d, pt, DEFAULT_SKEIN_CAP)
}

pub fn lambda_eval_with(d: &LinkDiagram, pt: &EvalPoint, cap: usize) -> Result<QuotientElement> {
    LambdaEngine::new(pt, cap).eval(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::kauffman_bracket;
    use crate::cyclo::to_quotient;
    use crate::link::{MontesinosDescriptor, Tangle};

    fn trefoil() -> LinkDiagram {
        LinkDiagram::new(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], 0).unwrap()
    }

    #[test]
    fn unknot_and_unlink() {
        for pt in EvalPoint::standard() {
            assert!(lambda_eval(&LinkDiagram::unknot(), &pt).unwrap().is_one());
            let t2 = lambda_eval(&LinkDiagram::unlink(2), &pt).unwrap();
            assert_eq!(t2, pt.constants().t2);
        }
    }

    #[test]
    fn kink_factors() {
        let pt = EvalPoint::f1();
        let curl = LinkDiagram::new(vec![[1, 1, 2, 2]], 0).unwrap();
        assert_eq!(lambda_eval(&curl, &pt).unwrap(), pt.a.inverse().unwrap());
        let back = LinkDiagram::new(vec![[1, 2, 2, 1]], 0).unwrap();
        assert_eq!(lambda_eval(&back, &pt).unwrap(), pt.a);
    }

    /// At `a = -A^-3`, `z = A + 1/A` the polynomial is the bracket.
    #[test]
    fn specializes_to_the_bracket() {
        let diagrams = [
            trefoil(),
            Tangle::integer(2).numerator(),
            "M(1/2,-1/2,2/5;1)"
                .parse::<MontesinosDescriptor>()
                .unwrap()
                .to_diagram(),
            "M(1/3,2/3,1/2)"
                .parse::<MontesinosDescriptor>()
                .unwrap()
                .to_diagram(),
        ];
        for a_exp in [1, 3, 7] {
            let pt = EvalPoint::bracket(a_exp).unwrap();
            for d in &diagrams {
                let b = kauffman_bracket(d).unwrap().poly;
                // bracket variable A is s^a_exp
                let expected = to_quotient(&b.substitute_power(a_exp as i32));
                assert_eq!(lambda_eval(d, &pt).unwrap(), expected, "{d:?}");
            }
        }
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let t = Tangle::from_fraction("7/3".parse().unwrap()).numerator();
        let pd = Pd {
            partner: t
                .partners()
                .unwrap()
                .into_iter()
                .map(|p| p as u32)
                .collect(),
            flip: vec![false; t.num_crossings()],
        };
        // move the last crossing to the front
        let n = pd.crossings();
        let perm: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
        let mut moved = vec![0u32; pd.partner.len()];
        for (h, &p) in pd.partner.iter().enumerate() {
            let nh = 4 * perm[h / 4] + h % 4;
            let np = 4 * perm[p as usize / 4] as u32 + (p & 3);
            moved[nh] = np;
        }
        let moved = Pd {
            partner: moved,
            flip: pd.flip.clone(),
        };
        assert_eq!(pd.canonical_code(), moved.canonical_code());
        assert_ne!(
            pd.canonical_code(),
            pd.switch(0).unflipped().canonical_code()
        );
    }

    fn pd_of(d: &LinkDiagram) -> Pd {
        Pd {
            partner: d
                .partners()
                .unwrap()
                .into_iter()
                .map(|p| p as u32)
                .collect(),
            flip: vec![false; d.num_crossings()],
        }
    }

    #[test]
    fn bigons() {
        let pd = pd_of(&trefoil());
        assert!(pd.find_bigon().is_none());
        assert!(pd.find_twist().is_some());
        let (c, d) = pd.switch(0).find_bigon().unwrap();
        assert_ne!(c, d);
        let (rest, loops) = pd.switch(0).splice(&[c, d], opp);
        assert_eq!((rest.crossings(), loops), (1, 0));
    }

    #[test]
    fn stacking_is_optimal() {
        // 0 over 1 twice, 1 over 2 once, 2 over 0 once
        let over = vec![vec![0, 2, 0], vec![0, 0, 1], vec![1, 0, 0]];
        assert_eq!(stacking_order(&over), vec![0, 1, 2]);
    }

    #[test]
    fn large_montesinos_is_fast() {
        let d = "M(-5/7,2/7,3/5,1/4;-3)"
            .parse::<MontesinosDescriptor>()
            .unwrap()
            .to_diagram();
        let mut engine = LambdaEngine::new(&EvalPoint::q1(), 40);
        engine.eval(&d).unwrap();
        assert!(engine.memo_len() < 1000);
    }
}
