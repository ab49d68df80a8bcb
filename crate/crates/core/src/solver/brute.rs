use crate::graph::SimpleGraph;

use super::SolverError;

pub const BRUTE_FORCE_MAX_EDGES: usize = 15;

/// Path number by exhaustive labelling: every edge gets a path label
/// (labels introduced in order of first use), and a labelling counts when
/// each label class is a path. Only per-label degree is pruned during the
/// walk; shape is checked at the leaves.
pub fn brute_force_pn(g: &SimpleGraph) -> Result<usize, SolverError> {
    let edges = g.edges();
    if edges.len() > BRUTE_FORCE_MAX_EDGES {
        return Err(SolverError::TooManyEdgesForOracle {
            m: edges.len(),
            limit: BRUTE_FORCE_MAX_EDGES,
        });
    }
    if edges.is_empty() {
        return Ok(0);
    }
    for k in 1..=edges.len() {
        let mut b = Labelling {
            n: g.n(),
            edges: &edges,
            k,
            label: vec![0; edges.len()],
            deg: vec![0; k * g.n()],
        };
        if b.assign(0, 0) {
            return Ok(k);
        }
    }
    unreachable!("one edge per label is always a decomposition")
}

struct Labelling<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    k: usize,
    label: Vec<usize>,
    deg: Vec<u8>,
}

impl Labelling<'_> {
    fn assign(&mut self, i: usize, opened: usize) -> bool {
        if i == self.edges.len() {
            return opened == self.k && (0..self.k).all(|l| self.is_path(l));
        }
        // too few edges left to open the remaining labels
        if self.k - opened > self.edges.len() - i {
            return false;
        }
        let (u, v) = self.edges[i];
        for l in 0..(opened + 1).min(self.k) {
            let (du, dv) = (l * self.n + u, l * self.n + v);
            if self.deg[du] == 2 || self.deg[dv] == 2 {
                continue;
            }
            self.deg[du] += 1;
            self.deg[dv] += 1;
            self.label[i] = l;
            let ok = self.assign(i + 1, opened.max(l + 1));
            self.deg[du] -= 1;
            self.deg[dv] -= 1;
            if ok {
                return true;
            }
        }
        false
    }

    fn is_path(&self, l: usize) -> bool {
        let mine: Vec<(usize, usize)> = (0..self.edges.len())
            .filter(|&i| self.label[i] == l)
            .map(|i| self.edges[i])
            .collect();
        let touched: Vec<usize> = (0..self.n).filter(|&v| self.deg[l * self.n + v] > 0).collect();
        if touched.len() != mine.len() + 1 {
            return false;
        }
        // connected via union-find; with |V| = |E| + 1 that also rules out cycles
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut merges = 0;
        for &(u, v) in &mine {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                merges += 1;
            }
        }
        merges == mine.len()
    }
}
