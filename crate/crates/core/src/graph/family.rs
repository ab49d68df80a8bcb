//! Membership in the family of graphs in which every block has maximum
//! degree at most 3 and every component either has maximum degree at most 3
//! or has at most one block containing a triangle.

use thiserror::Error;

use super::{bit, blocks, BlockDecomposition, Edge, SimpleGraph, Vertex, MAX_VERTICES};

/// Outcome of the two membership clauses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyGCheck {
    /// Every block has maximum degree at most 3 (degrees counted inside the block).
    pub block_degree_ok: bool,
    /// Every component has maximum degree at most 3 or at most one triangle block.
    pub component_ok: bool,
}

impl FamilyGCheck {
    pub fn holds(&self) -> bool {
        self.block_degree_ok && self.component_ok
    }
}

fn block_degree_ok(g: &SimpleGraph, b: &BlockDecomposition) -> bool {
    (0..b.blocks.len()).all(|i| b.block_max_degree(g, i) <= 3)
}

pub fn family_g_check(h: &SimpleGraph) -> FamilyGCheck {
    let b = blocks(h);
    let block_degree_ok = block_degree_ok(h, &b);
    let component_ok = h.components().iter().all(|comp| {
        let mask = comp.iter().fold(0u64, |acc, &v| acc | bit(v));
        if h.max_degree_in(mask) <= 3 {
            return true;
        }
        let triangle_blocks = (0..b.blocks.len())
            .filter(|&i| mask & bit(b.blocks[i][0]) != 0 && b.block_has_triangle(h, i))
            .count();
        triangle_blocks <= 1
    });
    FamilyGCheck {
        block_degree_ok,
        component_ok,
    }
}

pub fn in_family_g(h: &SimpleGraph) -> bool {
    family_g_check(h).holds()
}

/// A supergraph in the family together with an embedding of the subject graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGWitness {
    pub supergraph: SimpleGraph,
    /// `injection[v]` is the supergraph vertex hosting subject vertex `v`.
    pub injection: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessFailure {
    #[error("injection covers {got} vertices, subject has {expected}")]
    InjectionLength { expected: usize, got: usize },
    #[error("image {image} of vertex {vertex} is outside the supergraph")]
    OutOfRange { vertex: Vertex, image: Vertex },
    #[error("vertices {first} and {second} share an image")]
    NotInjective { first: Vertex, second: Vertex },
    #[error("edge {0:?} has no image edge in the supergraph")]
    MissingEdge(Edge),
    #[error("supergraph is not in the family: {0:?}")]
    NotInFamily(FamilyGCheck),
}

pub fn verify_family_g_witness(h: &SimpleGraph, w: &FamilyGWitness) -> Result<(), WitnessFailure> {
    if w.injection.len() != h.n() {
        return Err(WitnessFailure::InjectionLength {
            expected: h.n(),
            got: w.injection.len(),
        });
    }
    let mut owner = vec![usize::MAX; w.supergraph.n()];
    for (v, &img) in w.injection.iter().enumerate() {
        if img >= w.supergraph.n() {
            return Err(WitnessFailure::OutOfRange { vertex: v, image: img });
        }
        if owner[img] != usize::MAX {
            return Err(WitnessFailure::NotInjective {
                first: owner[img],
                second: v,
            });
        }
        owner[img] = v;
    }
    for (a, b) in h.edges() {
        if !w.supergraph.has_edge(w.injection[a], w.injection[b]) {
            return Err(WitnessFailure::MissingEdge((a, b)));
        }
    }
    let check = family_g_check(&w.supergraph);
    if !check.holds() {
        return Err(WitnessFailure::NotInFamily(check));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionBudget {
    pub max_new_vertices: usize,
    pub max_new_edges: usize,
    /// Cap on membership checks before giving up.
    pub max_checks: usize,
}

impl Default for CompletionBudget {
    fn default() -> Self {
        CompletionBudget {
            max_new_vertices: 2,
            max_new_edges: 6,
            max_checks: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletionOutcome {
    Found {
        witness: FamilyGWitness,
        added_edges: Vec<Edge>,
        new_vertices: usize,
    },
    /// No supergraph of any size can be in the family.
    DefiniteNo(String),
    /// Nothing found within the budget; not a proof of nonexistence.
    NotFound { checks: usize, budget_exhausted: bool },
}

impl CompletionOutcome {
    pub fn witness(&self) -> Option<&FamilyGWitness> {
        match self {
            CompletionOutcome::Found { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

pub fn complete_to_family_g(
    h: &SimpleGraph,
    max_new_vertices: usize,
    max_new_edges: usize,
) -> CompletionOutcome {
    complete_to_family_g_with(
        h,
        CompletionBudget {
            max_new_vertices,
            max_new_edges,
            ..CompletionBudget::default()
        },
    )
}

/// Reasons no supergraph of `h` can be in the family.
///
/// Block-internal degrees never drop when edges or vertices are added, and
/// blocks only merge along paths of the block-cut tree. A component with a
/// vertex of degree at least 4 must end up with all its triangle blocks inside
/// one block, which then contains the union of the tree paths between them.
fn obstruction(h: &SimpleGraph) -> Option<String> {
    let b = blocks(h);
    for i in 0..b.blocks.len() {
        if b.block_max_degree(h, i) >= 4 {
            return Some(format!(
                "block {:?} has an internal vertex of degree >= 4",
                b.blocks[i]
            ));
        }
    }
    let nb = b.blocks.len();
    let cut_index = |v: Vertex| b.cut_vertices.binary_search(&v).ok().map(|k| nb + k);
    let nodes = nb + b.cut_vertices.len();
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (i, vs) in b.blocks.iter().enumerate() {
        for &v in vs {
            if let Some(c) = cut_index(v) {
                tree[i].push(c);
                tree[c].push(i);
            }
        }
    }
    for comp in h.components() {
        let mask = comp.iter().fold(0u64, |acc, &v| acc | bit(v));
        if h.max_degree_in(mask) < 4 {
            continue;
        }
        let in_comp: Vec<usize> = (0..nb)
            .filter(|&i| mask & bit(b.blocks[i][0]) != 0)
            .collect();
        let tri: Vec<bool> = (0..nodes)
            .map(|i| i < nb && b.block_has_triangle(h, i))
            .collect();
        if in_comp.iter().filter(|&&i| tri[i]).count() < 2 {
            continue;
        }
        // prune non-triangle leaves until the Steiner subtree remains
        let mut alive = vec![false; nodes];
        for &i in &in_comp {
            alive[i] = true;
            for &c in &tree[i] {
                alive[c] = true;
            }
        }
        loop {
            let mut changed = false;
            for x in 0..nodes {
                if !alive[x] || tri[x] {
                    continue;
                }
                let live = tree[x].iter().filter(|&&y| alive[y]).count();
                if live <= 1 {
                    alive[x] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut deg = vec![0usize; h.n()];
        for &i in &in_comp {
            if alive[i] {
                for &(u, v) in &b.block_edges[i] {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
        }
        if let Some(v) = (0..h.n()).find(|&v| deg[v] >= 4) {
            return Some(format!(
                "component containing {} has degree >= 4 and its triangle blocks cannot merge without vertex {v} reaching block degree 4",
                comp[0]
            ));
        }
    }
    None
}

pub fn complete_to_family_g_with(h: &SimpleGraph, budget: CompletionBudget) -> CompletionOutcome {
    if in_family_g(h) {
        return CompletionOutcome::Found {
            witness: FamilyGWitness {
                supergraph: h.clone(),
                injection: (0..h.n()).collect(),
            },
            added_edges: Vec::new(),
            new_vertices: 0,
        };
    }
    if let Some(reason) = obstruction(h) {
        return CompletionOutcome::DefiniteNo(reason);
    }
    let n = h.n();
    let extra = budget.max_new_vertices.min(MAX_VERTICES - n);
    let base = h.with_new_vertices(extra).expect("bounded by MAX_VERTICES");
    let total = n + extra;

    let mut search = Completion {
        n,
        checks: 0,
        max_checks: budget.max_checks,
        candidates: Vec::new(),
        chosen: Vec::new(),
    };
    // existing non-edges first, then edges touching new vertices
    let mut raw: Vec<Edge> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !h.has_edge(u, v) {
                raw.push((u, v));
            }
        }
    }
    for v in n..total {
        for u in 0..v {
            raw.push((u, v));
        }
    }
    for e in raw {
        let g = base.with_edges_added(&[e]).unwrap();
        search.checks += 1;
        if block_degree_ok(&g, &blocks(&g)) {
            search.candidates.push(e);
        }
    }

    for size in 1..=budget.max_new_edges {
        match search.level(&base, 0, size) {
            Ok(Some(g)) => {
                let used = (n..total)
                    .take_while(|&v| g.degree(v) > 0)
                    .count();
                let (supergraph, _) = g.induced(&(0..n + used).collect::<Vec<_>>());
                let added_edges = search.chosen.clone();
                return CompletionOutcome::Found {
                    witness: FamilyGWitness {
                        supergraph,
                        injection: (0..n).collect(),
                    },
                    added_edges,
                    new_vertices: used,
                };
            }
            Ok(None) => {}
            Err(()) => {
                return CompletionOutcome::NotFound {
                    checks: search.checks,
                    budget_exhausted: true,
                }
            }
        }
    }
    CompletionOutcome::NotFound {
        checks: search.checks,
        budget_exhausted: false,
    }
}

struct Completion {
    n: usize,
    checks: usize,
    max_checks: usize,
    candidates: Vec<Edge>,
    chosen: Vec<Edge>,
}

impl Completion {
    fn new_vertices_contiguous(&self, g: &SimpleGraph) -> bool {
        let mut gap = false;
        for v in self.n..g.n() {
            if g.degree(v) == 0 {
                gap = true;
            } else if gap {
                return false;
            }
        }
        true
    }

    /// Depth-first over lexicographic combinations of exactly `left` more
    /// candidates starting at `from`.
    fn level(&mut self, g: &SimpleGraph, from: usize, left: usize) -> Result<Option<SimpleGraph>, ()> {
        if left == 0 {
            if !self.new_vertices_contiguous(g) {
                return Ok(None);
            }
            self.checks += 1;
            if self.checks > self.max_checks {
                return Err(());
            }
            return Ok(in_family_g(g).then(|| g.clone()));
        }
        for i in from..self.candidates.len() {
            if self.candidates.len() - i < left {
                break;
            }
            let e = self.candidates[i];
            let next = g.with_edges_added(&[e]).unwrap();
            if left > 1 {
                self.checks += 1;
                if self.checks > self.max_checks {
                    return Err(());
                }
                if !block_degree_ok(&next, &blocks(&next)) {
                    continue;
                }
            }
            self.chosen.push(e);
            if let Some(found) = self.level(&next, i + 1, left - 1)? {
                return Ok(Some(found));
            }
            self.chosen.pop();
        }
        Ok(None)
    }
}
