//! Edge-mask search core shared by the exact solver and the constrained
//! search. Edges of one host are numbered `0..m` (`m <= 128`) and an edge
//! subset is a `u128`.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{bit, bits, SimpleGraph};

pub(crate) const MAX_EDGES: usize = 128;
const NO_EDGE: u8 = u8::MAX;

pub(crate) type Path = Vec<u8>;

pub(crate) struct EdgeIndex {
    pub n: usize,
    pub ends: Vec<(u8, u8)>,
    index: Vec<u8>,
}

impl EdgeIndex {
    pub fn new(g: &SimpleGraph) -> Option<Self> {
        let edges = g.edges();
        if edges.len() > MAX_EDGES {
            return None;
        }
        let n = g.n();
        let mut index = vec![NO_EDGE; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u * n + v] = i as u8;
            index[v * n + u] = i as u8;
        }
        Some(EdgeIndex {
            n,
            ends: edges.iter().map(|&(u, v)| (u as u8, v as u8)).collect(),
            index,
        })
    }

    pub fn all(&self) -> u128 {
        match self.ends.len() {
            128 => u128::MAX,
            m => (1u128 << m) - 1,
        }
    }

    #[inline]
    pub fn edge(&self, u: u8, v: u8) -> usize {
        self.index[u as usize * self.n + v as usize] as usize
    }

    pub fn adjacency(&self, r: u128) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        let mut rest = r;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = self.ends[i];
            adj[u as usize] |= bit(v as usize);
            adj[v as usize] |= bit(u as usize);
        }
        adj
    }

    pub fn vertices_of(&self, mut r: u128) -> u64 {
        let mut out = 0;
        while r != 0 {
            let (u, v) = self.ends[r.trailing_zeros() as usize];
            r &= r - 1;
            out |= bit(u as usize) | bit(v as usize);
        }
        out
    }

    pub fn path_mask(&self, p: &[u8]) -> u128 {
        p.windows(2)
            .fold(0u128, |acc, w| acc | 1u128 << self.edge(w[0], w[1]))
    }
}

pub(crate) struct ComponentInfo {
    pub mask: u128,
    pub lower_bound: u32,
}

/// Connected pieces of the edge set `r` with a per-piece lower bound.
pub(crate) fn split(ix: &EdgeIndex, adj: &[u64], r: u128) -> Vec<ComponentInfo> {
    let mut out = Vec::new();
    let mut rest = r;
    while rest != 0 {
        let first = rest.trailing_zeros() as usize;
        let start = ix.ends[first].0 as usize;
        let mut comp = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        let mut mask = 0u128;
        let mut scan = rest;
        while scan != 0 {
            let i = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if comp & bit(ix.ends[i].0 as usize) != 0 {
                mask |= 1 << i;
            }
        }
        rest &= !mask;
        let n_c = comp.count_ones();
        let odd = bits(comp).filter(|&v| adj[v].count_ones() % 2 == 1).count() as u32;
        out.push(ComponentInfo {
            mask,
            lower_bound: component_bound(n_c, mask.count_ones(), odd),
        });
    }
    out
}

/// Bound for one connected graph with `n` vertices, `m >= 1` edges and
/// `odd` odd vertices.
pub(crate) fn component_bound(n: u32, m: u32, odd: u32) -> u32 {
    if m == 0 {
        return 0;
    }
    let mut lb = odd.div_ceil(2).max(1);
    if n >= 2 {
        lb = lb.max(m.div_ceil(n - 1));
        if m > (n / 2) * (n - 1) {
            lb = lb.max(n.div_ceil(2));
        }
    }
    lb
}

/// Visits every path of `adj` that contains edge `(a, b)`. Each undirected
/// path is produced once, as a vertex sequence through `a` then `b`;
/// longer extensions of a prefix are produced before the prefix itself.
/// The visitor returns `true` to stop.
pub(crate) fn for_each_path_through(
    adj: &[u64],
    a: u8,
    b: u8,
    visit: &mut dyn FnMut(&[u8]) -> bool,
) -> bool {
    let mut left = vec![a];
    let used = bit(a as usize) | bit(b as usize);
    extend_left(adj, &mut left, used, b, visit)
}

fn extend_left(
    adj: &[u64],
    left: &mut Vec<u8>,
    used: u64,
    b: u8,
    visit: &mut dyn FnMut(&[u8]) -> bool,
) -> bool {
    let end = *left.last().unwrap() as usize;
    for w in bits(adj[end] & !used) {
        left.push(w as u8);
        let stop = extend_left(adj, left, used | bit(w), b, visit);
        left.pop();
        if stop {
            return true;
        }
    }
    let mut path: Vec<u8> = left.iter().rev().copied().collect();
    path.push(b);
    extend_right(adj, &mut path, used, visit)
}

fn extend_right(
    adj: &[u64],
    path: &mut Vec<u8>,
    used: u64,
    visit: &mut dyn FnMut(&[u8]) -> bool,
) -> bool {
    let end = *path.last().unwrap() as usize;
    for w in bits(adj[end] & !used) {
        path.push(w as u8);
        let stop = extend_right(adj, path, used | bit(w), visit);
        path.pop();
        if stop {
            return true;
        }
    }
    visit(path)
}

/// Randomized greedy decomposition of the edge set `r`; best of `rounds`.
pub(crate) fn greedy(ix: &EdgeIndex, r: u128, rounds: usize, seed: u64) -> Vec<Path> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Vec<Path>> = None;
    for _ in 0..rounds.max(1) {
        let mut rest = r;
        let mut adj = ix.adjacency(r);
        let mut paths = Vec::new();
        while rest != 0 {
            let live: Vec<usize> = (0..ix.n).filter(|&v| adj[v] != 0).collect();
            let odd: Vec<usize> = live
                .iter()
                .copied()
                .filter(|&v| adj[v].count_ones() % 2 == 1)
                .collect();
            let start = *odd.choose(&mut rng).unwrap_or_else(|| live.choose(&mut rng).unwrap());
            let mut path = vec![start as u8];
            let mut on_path = bit(start);
            for side in 0..2 {
                if side == 1 {
                    path.reverse();
                }
                loop {
                    let end = *path.last().unwrap() as usize;
                    let options: Vec<usize> = bits(adj[end] & !on_path).collect();
                    if options.is_empty() {
                        break;
                    }
                    // mostly step to the neighbour with the most remaining edges
                    let w = if rng.gen_bool(0.7) {
                        *options
                            .iter()
                            .max_by_key(|&&w| (adj[w].count_ones(), rng.gen::<u8>()))
                            .unwrap()
                    } else {
                        *options.choose(&mut rng).unwrap()
                    };
                    adj[end] &= !bit(w);
                    adj[w] &= !bit(end);
                    rest &= !(1u128 << ix.edge(end as u8, w as u8));
                    on_path |= bit(w);
                    path.push(w as u8);
                }
            }
            paths.push(path);
        }
        if best.as_ref().is_none_or(|b| paths.len() < b.len()) {
            best = Some(paths);
        }
    }
    best.unwrap()
}

pub(crate) fn deadline_after(timeout_ms: u64) -> Option<Instant> {
    Instant::now().checked_add(Duration::from_millis(timeout_ms))
}

pub(crate) struct Clock {
    deadline: Option<Instant>,
    pub nodes: u64,
    pub expired: bool,
}

impl Clock {
    pub fn until(deadline: Option<Instant>) -> Self {
        Clock {
            deadline,
            nodes: 0,
            expired: false,
        }
    }

    /// Counts a node; `true` once the deadline has passed.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        if !self.expired && self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                self.expired = Instant::now() >= d;
            }
        }
        self.expired
    }
}
