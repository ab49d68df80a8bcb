use std::collections::HashSet;

use crate::decomposition::PathDecomposition;
use crate::graph::{bit, bits, SimpleGraph};

use super::engine::{for_each_path_through, split, Clock, EdgeIndex, Path};
use super::SolverError;

/// Exact endpoint targets: `targets[u] = Some(d)` demands `D(u) = d`;
/// `total` is the exact number of paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointConstraint {
    pub targets: Vec<Option<usize>>,
    pub total: usize,
}

impl EndpointConstraint {
    pub fn unconstrained(n: usize, total: usize) -> Self {
        EndpointConstraint {
            targets: vec![None; n],
            total,
        }
    }

    /// Every vertex pinned to its count in `d`, with `d`'s size.
    pub fn matching(d: &PathDecomposition) -> Self {
        EndpointConstraint {
            targets: d.endpoint_counts().iter().map(|&c| Some(c)).collect(),
            total: d.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstrainedOutcome {
    Found(PathDecomposition),
    /// The search finished: no decomposition meets the constraint.
    Infeasible,
    TimedOut,
}

impl ConstrainedOutcome {
    pub fn found(self) -> Option<PathDecomposition> {
        match self {
            ConstrainedOutcome::Found(d) => Some(d),
            _ => None,
        }
    }
}

const FREE: i16 = -1;

/// Searches for a decomposition of `g` into exactly `c.total` paths with
/// every pinned endpoint count met exactly.
pub fn constrained_decompose(
    g: &SimpleGraph,
    c: &EndpointConstraint,
    timeout_ms: u64,
) -> Result<ConstrainedOutcome, SolverError> {
    if c.targets.len() != g.n() {
        return Err(SolverError::ConstraintSize {
            n: g.n(),
            got: c.targets.len(),
        });
    }
    let ix = EdgeIndex::new(g).ok_or(SolverError::TooManyEdges { m: g.m() })?;
    let mut need: Vec<i16> = c
        .targets
        .iter()
        .map(|t| t.map_or(FREE, |d| d.min(i16::MAX as usize) as i16))
        .collect();
    let mut s = Search {
        ix: &ix,
        failed: HashSet::new(),
        clock: Clock::until(super::engine::deadline_after(timeout_ms)),
        stack: Vec::new(),
    };
    let total = c.total.min(u32::MAX as usize) as u32;
    if s.run(ix.all(), &mut need, total) {
        let paths = s
            .stack
            .iter()
            .map(|p| p.iter().map(|&v| v as usize).collect())
            .collect();
        let d = PathDecomposition::from_vertex_lists(g.n(), paths)
            .expect("search produces simple paths");
        crate::decomposition::audit(g, &d);
        return Ok(ConstrainedOutcome::Found(d));
    }
    Ok(if s.clock.expired {
        ConstrainedOutcome::TimedOut
    } else {
        ConstrainedOutcome::Infeasible
    })
}

struct Search<'a> {
    ix: &'a EdgeIndex,
    failed: HashSet<(u128, Vec<i16>, u32)>,
    clock: Clock,
    stack: Vec<Path>,
}

impl Search<'_> {
    fn plausible(&self, adj: &[u64], r: u128, need: &[i16], t: u32) -> bool {
        if r == 0 {
            return t == 0 && need.iter().all(|&x| x <= 0);
        }
        if t == 0 || t as usize > r.count_ones() as usize {
            return false;
        }
        let (mut lo, mut hi) = (0i64, 0i64);
        for v in 0..self.ix.n {
            let d = adj[v].count_ones() as i64;
            match need[v] {
                FREE => {
                    lo += d % 2;
                    hi += d;
                }
                x => {
                    let x = x as i64;
                    if x > d || x % 2 != d % 2 {
                        return false;
                    }
                    lo += x;
                    hi += x;
                }
            }
        }
        let ends = 2 * t as i64;
        if ends < lo || ends > hi || (ends - lo) % 2 != 0 {
            return false;
        }
        let (mut t_lo, mut t_hi) = (0i64, 0i64);
        for c in split(self.ix, adj, r) {
            let (mut lo_c, mut hi_c) = (0i64, 0i64);
            for v in bits(self.ix.vertices_of(c.mask)) {
                let d = adj[v].count_ones() as i64;
                match need[v] {
                    FREE => {
                        lo_c += d % 2;
                        hi_c += d;
                    }
                    x => {
                        lo_c += x as i64;
                        hi_c += x as i64;
                    }
                }
            }
            let min_c = (c.lower_bound as i64).max((lo_c + 1) / 2);
            let max_c = (hi_c / 2).min(c.mask.count_ones() as i64);
            if min_c > max_c {
                return false;
            }
            t_lo += min_c;
            t_hi += max_c;
        }
        t_lo <= t as i64 && t as i64 <= t_hi
    }

    /// `r` is one path; its ends were checked against the targets already.
    fn single_path(&mut self, adj: &[u64], r: u128) -> bool {
        let ends: Vec<usize> = (0..self.ix.n).filter(|&v| adj[v].count_ones() == 1).collect();
        if ends.len() != 2 || adj.iter().any(|a| a.count_ones() > 2) {
            return false;
        }
        let mut path = vec![ends[0] as u8];
        let mut prev = 0;
        let mut at = ends[0];
        while at != ends[1] {
            let next = bits(adj[at] & !prev).next().unwrap();
            prev = bit(at);
            at = next;
            path.push(at as u8);
        }
        if path.len() as u32 != r.count_ones() + 1 {
            return false;
        }
        self.stack.push(path);
        true
    }

    fn run(&mut self, r: u128, need: &mut Vec<i16>, t: u32) -> bool {
        if self.clock.tick() {
            return false;
        }
        let adj = self.ix.adjacency(r);
        if !self.plausible(&adj, r, need, t) {
            return false;
        }
        if r == 0 {
            return true;
        }
        if t == 1 {
            return self.single_path(&adj, r);
        }
        let key = (r, need.clone(), t);
        if self.failed.contains(&key) {
            return false;
        }
        let first = r.trailing_zeros() as usize;
        let (a, b) = self.ix.ends[first];
        let ix = self.ix;
        let mut found = false;
        for_each_path_through(&adj, a, b, &mut |p| {
            if self.clock.expired {
                return true;
            }
            let (x, y) = (p[0] as usize, p[p.len() - 1] as usize);
            if need[x] == 0 || need[y] == 0 {
                return false;
            }
            for &e in &[x, y] {
                if need[e] != FREE {
                    need[e] -= 1;
                }
            }
            self.stack.push(p.to_vec());
            found = self.run(r & !ix.path_mask(p), need, t - 1);
            if !found {
                self.stack.pop();
            }
            for &e in &[x, y] {
                if need[e] != FREE {
                    need[e] += 1;
                }
            }
            found
        });
        if !found && !self.clock.expired {
            self.failed.insert(key);
        }
        found
    }
}
