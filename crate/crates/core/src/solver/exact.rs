use std::collections::HashMap;
use std::rc::Rc;
use std::time::Instant;

use super::engine::{for_each_path_through, split, Clock, EdgeIndex, Path};

const MEMO_LIMIT: usize = 2_000_000;

enum Entry {
    /// No decomposition with fewer than this many paths.
    AtLeast(u32),
    Solved(Rc<Vec<Path>>),
}

pub(crate) struct Exact<'a> {
    ix: &'a EdgeIndex,
    memo: HashMap<u128, Entry>,
    pub clock: Clock,
}

impl<'a> Exact<'a> {
    pub fn new(ix: &'a EdgeIndex, deadline: Option<Instant>) -> Self {
        Exact {
            ix,
            memo: HashMap::new(),
            clock: Clock::until(deadline),
        }
    }

    fn remember(&mut self, r: u128, e: Entry) {
        if self.clock.expired {
            return;
        }
        if self.memo.len() >= MEMO_LIMIT {
            self.memo.clear();
        }
        self.memo.insert(r, e);
    }

    /// A minimum decomposition of `r` if it has at most `limit` paths.
    pub fn solve(&mut self, r: u128, limit: u32) -> Option<Rc<Vec<Path>>> {
        if r == 0 {
            return Some(Rc::new(Vec::new()));
        }
        if self.clock.tick() {
            return None;
        }
        match self.memo.get(&r) {
            Some(Entry::Solved(s)) => {
                return (s.len() as u32 <= limit).then(|| s.clone());
            }
            Some(Entry::AtLeast(lb)) if *lb > limit => return None,
            _ => {}
        }
        let adj = self.ix.adjacency(r);
        let comps = split(self.ix, &adj, r);
        let lb: u32 = comps.iter().map(|c| c.lower_bound).sum();
        if lb > limit {
            self.remember(r, Entry::AtLeast(lb));
            return None;
        }
        if comps.len() > 1 {
            let mut rest_lb = lb;
            let mut used = 0;
            let mut all = Vec::new();
            for c in &comps {
                rest_lb -= c.lower_bound;
                match self.solve(c.mask, limit - used - rest_lb) {
                    Some(s) => {
                        used += s.len() as u32;
                        all.extend(s.iter().cloned());
                    }
                    None => {
                        self.remember(r, Entry::AtLeast(limit + 1));
                        return None;
                    }
                }
            }
            let all = Rc::new(all);
            self.remember(r, Entry::Solved(all.clone()));
            return Some(all);
        }

        let odd_r = (0..self.ix.n)
            .filter(|&v| adj[v].count_ones() % 2 == 1)
            .count() as u32;
        let first = r.trailing_zeros() as usize;
        let (a, b) = self.ix.ends[first];
        let ix = self.ix;
        let mut cap = limit;
        let mut best: Option<Rc<Vec<Path>>> = None;
        for_each_path_through(&adj, a, b, &mut |p| {
            if self.clock.expired {
                return true;
            }
            let (x, y) = (p[0] as usize, p[p.len() - 1] as usize);
            let flip = |v: usize| if adj[v].count_ones() % 2 == 1 { -1i32 } else { 1 };
            let odd_after = (odd_r as i32 + flip(x) + flip(y)) as u32;
            if odd_after.div_ceil(2) + 1 > cap {
                return false;
            }
            let rem = r & !ix.path_mask(p);
            if let Some(s) = self.solve(rem, cap - 1) {
                let mut paths = Vec::with_capacity(s.len() + 1);
                paths.push(p.to_vec());
                paths.extend(s.iter().cloned());
                cap = paths.len() as u32 - 1;
                best = Some(Rc::new(paths));
                if cap < lb {
                    return true;
                }
            }
            false
        });
        if self.clock.expired {
            return None;
        }
        match best {
            Some(s) => {
                self.remember(r, Entry::Solved(s.clone()));
                Some(s)
            }
            None => {
                self.remember(r, Entry::AtLeast(limit + 1));
                None
            }
        }
    }
}
