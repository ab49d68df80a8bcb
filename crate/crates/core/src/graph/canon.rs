use super::{bit, GraphError, SimpleGraph};

pub const MAX_CANON_VERTICES: usize = 9;

/// Canonical byte string: `[n]` followed by the lexicographically smallest
/// upper-triangle adjacency bit string over all vertex permutations,
/// packed big-endian. Bits run column by column, `(0,1), (0,2), (1,2), ...`,
/// so a prefix of the string is fixed once a prefix of the ordering is.
pub fn canonical_form(g: &SimpleGraph) -> Result<Vec<u8>, GraphError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::CanonTooLarge {
            n,
            limit: MAX_CANON_VERTICES,
        });
    }
    let len = n * n.saturating_sub(1) / 2;
    let mut search = Search {
        g,
        n,
        len,
        best: u64::MAX,
        order: Vec::with_capacity(n),
    };
    search.run(0, 0, 0);
    let best = if n <= 1 { 0 } else { search.best };

    let mut out = vec![n as u8];
    let nbytes = len.div_ceil(8);
    for i in 0..nbytes {
        let mut byte = 0u8;
        for j in 0..8 {
            let k = i * 8 + j;
            if k < len && (best >> (len - 1 - k)) & 1 == 1 {
                byte |= 0x80 >> j;
            }
        }
        out.push(byte);
    }
    Ok(out)
}

struct Search<'a> {
    g: &'a SimpleGraph,
    n: usize,
    len: usize,
    best: u64,
    order: Vec<usize>,
}

impl Search<'_> {
    // `value` holds the first `filled` bits, most significant first.
    fn run(&mut self, used: u64, value: u64, filled: usize) {
        let j = self.order.len();
        if j == self.n {
            if value < self.best {
                self.best = value;
            }
            return;
        }
        for v in 0..self.n {
            if used & bit(v) != 0 {
                continue;
            }
            let mut val = value;
            for &p in &self.order {
                val = (val << 1) | self.g.has_edge(p, v) as u64;
            }
            let filled2 = filled + j;
            if self.best != u64::MAX && filled2 > 0 {
                let best_prefix = self.best >> (self.len - filled2);
                if val > best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.run(used | bit(v), val, filled2);
            self.order.pop();
        }
    }
}

/// `(n, m, sorted degree sequence)` key used for graphs too large for
/// [`canonical_form`]. Equal keys do not imply isomorphism.
pub fn degree_signature(g: &SimpleGraph) -> (usize, usize, Vec<usize>) {
    let mut d = g.degrees();
    d.sort_unstable();
    (g.n(), g.m(), d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn cycle_labelings_agree() {
        let c4 = SimpleGraph::cycle(4);
        let other = SimpleGraph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&other).unwrap());
        assert_ne!(
            canonical_form(&c4).unwrap(),
            canonical_form(&SimpleGraph::path(4)).unwrap()
        );
    }

    #[test]
    fn all_labelings_of_p3_collapse() {
        let p3 = SimpleGraph::path(3);
        let forms: std::collections::BTreeSet<Vec<u8>> = all_perms(3)
            .iter()
            .map(|p| canonical_form(&p3.permute(p).unwrap()).unwrap())
            .collect();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn matches_exhaustive_minimum() {
        // brute-force minimum over all 5! orderings of the bit string
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let mut best = u64::MAX;
        for p in all_perms(5) {
            let mut v = 0u64;
            for j in 1..5 {
                for i in 0..j {
                    v = (v << 1) | g.has_edge(p[i], p[j]) as u64;
                }
            }
            best = best.min(v);
        }
        let form = canonical_form(&g).unwrap();
        let mut packed = 0u64;
        for k in 0..10 {
            if form[1 + k / 8] & (0x80 >> (k % 8)) != 0 {
                packed |= 1 << (9 - k);
            }
        }
        assert_eq!(packed, best);
    }

    #[test]
    fn size_limit() {
        assert!(canonical_form(&SimpleGraph::path(10)).is_err());
        assert!(canonical_form(&SimpleGraph::path(9)).is_ok());
    }
}
