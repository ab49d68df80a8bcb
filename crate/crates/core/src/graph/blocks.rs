use super::{bit, bits, Edge, SimpleGraph, Vertex};

/// Blocks (maximal 2-connected subgraphs, bridges and isolated vertices)
/// together with the cut vertices of the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex set of each block, sorted; blocks ordered by their vertex lists.
    pub blocks: Vec<Vec<Vertex>>,
    /// Edges of each block, parallel to `blocks`.
    pub block_edges: Vec<Vec<Edge>>,
    pub cut_vertices: Vec<Vertex>,
    pub leaf_block_indices: Vec<usize>,
}

impl BlockDecomposition {
    pub fn block_mask(&self, i: usize) -> u64 {
        self.blocks[i].iter().fold(0, |acc, &v| acc | bit(v))
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Whether the block contains a triangle of the host graph.
    pub fn block_has_triangle(&self, g: &SimpleGraph, i: usize) -> bool {
        let vs = &self.blocks[i];
        for (a, &x) in vs.iter().enumerate() {
            for (b, &y) in vs.iter().enumerate().skip(a + 1) {
                if !g.has_edge(x, y) {
                    continue;
                }
                for &z in &vs[b + 1..] {
                    if g.has_edge(x, z) && g.has_edge(y, z) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Maximum degree of a vertex counted only along edges of block `i`.
    pub fn block_max_degree(&self, g: &SimpleGraph, i: usize) -> usize {
        let mask = self.block_mask(i);
        self.blocks[i]
            .iter()
            .map(|&v| (g.neighbor_mask(v) & mask).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

struct Frame {
    v: Vertex,
    parent: Option<Vertex>,
    rest: u64,
}

/// Biconnected-component decomposition by an iterative lowpoint DFS.
pub fn blocks(g: &SimpleGraph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0usize;
    let mut raw: Vec<Vec<Edge>> = Vec::new();
    let mut isolated = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            isolated.push(root);
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0usize;
        let mut edge_stack: Vec<Edge> = Vec::new();
        let mut stack = vec![Frame {
            v: root,
            parent: None,
            rest: g.neighbor_mask(root),
        }];
        while let Some(top) = stack.last_mut() {
            if top.rest != 0 {
                let w = top.rest.trailing_zeros() as usize;
                top.rest &= top.rest - 1;
                let v = top.v;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push(Frame {
                        v: w,
                        parent: Some(v),
                        rest: g.neighbor_mask(w),
                    });
                } else if Some(w) != top.parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let done = stack.pop().unwrap();
                if let Some(p) = done.parent {
                    low[p] = low[p].min(low[done.v]);
                    if low[done.v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == (p, done.v) {
                                break;
                            }
                        }
                        raw.push(comp);
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    let mut pairs: Vec<(Vec<Vertex>, Vec<Edge>)> = raw
        .into_iter()
        .map(|es| {
            let mut mask = 0u64;
            let mut edges: Vec<Edge> = es
                .into_iter()
                .map(|(a, b)| {
                    mask |= bit(a) | bit(b);
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            (bits(mask).collect(), edges)
        })
        .collect();
    pairs.extend(isolated.into_iter().map(|v| (vec![v], Vec::new())));
    pairs.sort();

    let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| is_cut[v]).collect();
    let leaf_block_indices = pairs
        .iter()
        .enumerate()
        .filter(|(_, (vs, _))| vs.iter().filter(|&&v| is_cut[v]).count() <= 1)
        .map(|(i, _)| i)
        .collect();
    let (blocks, block_edges) = pairs.into_iter().unzip();
    BlockDecomposition {
        blocks,
        block_edges,
        cut_vertices,
        leaf_block_indices,
    }
}
