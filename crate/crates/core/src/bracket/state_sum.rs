use std::collections::BTreeMap;

use crate::cyclo::HalfLaurent;
use crate::error::{Error, Result};
use crate::link::LinkDiagram;

/// Default crossing cap for the state sum.
pub const DEFAULT_BRACKET_CAP: usize = 24;

/// Number of leading crossings whose states are split into independent
/// jobs.
const SPLIT_DEPTH: usize = 8;

/// The Kauffman bracket as a Laurent polynomial in `A`, normalized so that
/// a single circle has bracket 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketPolynomial {
    pub poly: HalfLaurent,
}

/// How the state enumeration is scheduled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

/// Union-find over arcs with an undo log; no path compression so that
/// every union can be rolled back.
struct RollbackDsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    log: Vec<u32>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            log: Vec::with_capacity(2 * n),
        }
    }

    #[inline]
    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    /// Returns whether two classes were merged; always pushes one log
    /// entry so that `undo` pops exactly one.
    #[inline]
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            self.log.push(u32::MAX);
            return false;
        }
        if self.size[a as usize] < self.size[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
        self.log.push(b);
        true
    }

    #[inline]
    fn undo(&mut self) {
        let b = self.log.pop().expect("undo without union");
        if b != u32::MAX {
            let a = self.parent[b as usize];
            self.size[a as usize] -= self.size[b as usize];
            self.parent[b as usize] = b;
        }
    }
}

/// Arcs touched by the two smoothings of each crossing.
struct Smoothings {
    /// `[a-pair, a-pair, b-pair, b-pair]`, each pair of arc indices.
    pairs: Vec<[(u32, u32); 4]>,
    arcs: usize,
}

impl Smoothings {
    fn new(d: &LinkDiagram) -> Result<Self> {
        let partner = d.partners()?;
        let mut arc = vec![u32::MAX; partner.len()];
        let mut next = 0u32;
        for h in 0..partner.len() {
            if arc[h] == u32::MAX {
                arc[h] = next;
                arc[partner[h]] = next;
                next += 1;
            }
        }
        let pairs = arc
            .chunks_exact(4)
            .map(|c| {
                [
                    // A-smoothing joins slots (0,1) and (2,3)
                    (c[0], c[1]),
                    (c[2], c[3]),
                    // B-smoothing joins (0,3) and (1,2)
                    (c[0], c[3]),
                    (c[1], c[2]),
                ]
            })
            .collect();
        Ok(Smoothings {
            pairs,
            arcs: next as usize,
        })
    }
}

/// `counts[a][j]`: number of states with `a` A-smoothings whose arcs form
/// `arcs - j` circles.
type Table = Vec<Vec<u64>>;

struct Walker<'a> {
    sm: &'a Smoothings,
    dsu: RollbackDsu,
    merges: usize,
    a_count: usize,
    table: Table,
}

impl<'a> Walker<'a> {
    fn new(sm: &'a Smoothings) -> Self {
        let n = sm.pairs.len();
        Walker {
            sm,
            dsu: RollbackDsu::new(sm.arcs),
            merges: 0,
            a_count: 0,
            table: vec![vec![0; sm.arcs + 1]; n + 1],
        }
    }

    #[inline]
    fn apply(&mut self, i: usize, b: bool) {
        let p = &self.sm.pairs[i];
        let off = if b { 2 } else { 0 };
        for &(x, y) in &p[off..off + 2] {
            if self.dsu.union(x, y) {
                self.merges += 1;
            }
        }
        if !b {
            self.a_count += 1;
        }
    }

    #[inline]
    fn revert(&mut self, b: bool) {
        for _ in 0..2 {
            let merged = *self.dsu.log.last().expect("log entry") != u32::MAX;
            self.dsu.undo();
            if merged {
                self.merges -= 1;
            }
        }
        if !b {
            self.a_count -= 1;
        }
    }

    /// Visits the states of crossings `i..` in reflected Gray-code order,
    /// so consecutive leaves differ at exactly one crossing.
    fn walk(&mut self, i: usize, forward: bool) {
        if i == self.sm.pairs.len() {
            self.table[self.a_count][self.merges] += 1;
            return;
        }
        let order = if forward {
            [false, true]
        } else {
            [true, false]
        };
        for b in order {
            self.apply(i, b);
            self.walk(i + 1, forward ^ b);
            self.revert(b);
        }
    }
}

fn run_prefix(sm: &Smoothings, depth: usize, prefix: usize) -> Table {
    let mut w = Walker::new(sm);
    let mut forward = true;
    for i in 0..depth {
        let b = (prefix >> (depth - 1 - i)) & 1 == 1;
        w.apply(i, b);
        forward ^= b;
    }
    w.walk(depth, forward);
    w.table
}

fn add_tables(mut a: Table, b: Table) -> Table {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += y;
        }
    }
    a
}

fn count_states(sm: &Smoothings, strategy: Strategy) -> Table {
    let n = sm.pairs.len();
    let depth = n.min(SPLIT_DEPTH);
    let jobs = 1usize << depth;
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel if n > SPLIT_DEPTH => {
            use rayon::prelude::*;
            (0..jobs)
                .into_par_iter()
                .map(|p| run_prefix(sm, depth, p))
                .reduce_with(add_tables)
                .expect("at least one job")
        }
        _ => (0..jobs)
            .map(|p| run_prefix(sm, depth, p))
            .reduce(add_tables)
            .expect("at least one job"),
    }
}

/// Kauffman bracket by the full state sum, scheduled in parallel when the
/// `parallel` feature is enabled.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<BracketPolynomial> {
    kauffman_bracket_with(d, DEFAULT_BRACKET_CAP, Strategy::default())
}

pub fn kauffman_bracket_with(
    d: &LinkDiagram,
    cap: usize,
    strategy: Strategy,
) -> Result<BracketPolynomial> {
    let n = d.num_crossings();
    if n > cap {
        return Err(Error::TooLarge { crossings: n, cap });
    }
    if n == 0 {
        if d.free_loops() == 0 {
            return Err(Error::InvalidDiagram("empty diagram".into()));
        }
        let delta = loop_value();
        return Ok(BracketPolynomial {
            poly: delta.pow(d.free_loops() as u32 - 1),
        });
    }
    let sm = Smoothings::new(d)?;
    let table = count_states(&sm, strategy);
    let delta = loop_value();
    let max_loops = sm.arcs + d.free_loops();
    let mut powers = vec![HalfLaurent::one()];
    for _ in 1..max_loops {
        let next = powers.last().expect("nonempty") * &delta;
        powers.push(next);
    }
    let mut acc: BTreeMap<i32, i128> = BTreeMap::new();
    for (a, row) in table.iter().enumerate() {
        let exp = 2 * a as i32 - n as i32;
        for (merges, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let loops = sm.arcs - merges + d.free_loops();
            for (e, c) in powers[loops - 1].terms() {
                *acc.entry(exp + e).or_default() += count as i128 * c as i128;
            }
        }
    }
    let mut poly = HalfLaurent::zero();
    for (e, c) in acc {
        let c = i64::try_from(c)
            .map_err(|_| Error::Consistency("bracket coefficient exceeds 64 bits".into()))?;
        poly.add_term(e, c);
    }
    Ok(BracketPolynomial { poly })
}

/// `-A^2 - A^-2`.
pub fn loop_value() -> HalfLaurent {
    HalfLaurent::from_terms([(2, -1), (-2, -1)])
}
