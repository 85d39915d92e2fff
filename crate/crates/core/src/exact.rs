//! Exact oracles for the independence and matching numbers.
//!
//! These are deliberately separate from the polynomial algorithms in
//! [`crate::matching`]: nothing here calls into the blossom or
//! Hopcroft–Karp code, so the two can be cross-checked.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::matching::Matching;

/// Default vertex bound for [`alpha_exact`].
pub const DEFAULT_ALPHA_BOUND: usize = 40;
/// Hard limit imposed by the 64-bit vertex masks.
pub const MAX_ALPHA_BOUND: usize = 64;
pub const MU_EXACT_BOUND: usize = 24;
pub const ALPHA_SUBSETS_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle scale exceeded: {n} vertices, limit {limit}")]
    ScaleExceeded { n: usize, limit: usize },
    #[error("oracle search cancelled")]
    Cancelled,
}

/// Cooperative cancellation flag polled by the long-running searches.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub cancel: Option<CancelToken>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: DEFAULT_ALPHA_BOUND,
            cancel: None,
        }
    }
}

impl OracleConfig {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        OracleConfig {
            max_vertices,
            cancel: None,
        }
    }
}

/// A set of pairwise non-adjacent vertices, sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndependentSet {
    pub vertices: Vec<usize>,
}

impl IndependentSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        IndependentSet { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

pub fn verify_independent(g: &Graph, s: &IndependentSet) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in &s.vertices {
        if v >= g.n() || inside[v] {
            return false;
        }
        inside[v] = true;
    }
    s.vertices
        .iter()
        .all(|&v| g.neighbors(v).iter().all(|&w| !inside[w]))
}

pub fn verify_matching(g: &Graph, m: &Matching) -> bool {
    let mut used = vec![false; g.n()];
    for &(u, v) in m.edges() {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

/// Maximum independent set by branch and bound with the default vertex bound.
pub fn alpha_exact(g: &Graph) -> Result<(usize, IndependentSet), OracleError> {
    alpha_exact_with(g, &OracleConfig::default())
}

/// Branch and bound: degree-0/1 vertices are taken greedily, branching is
/// on a maximum-degree vertex (smallest id on ties), and subproblems are
/// pruned by a greedy clique cover of the remaining candidates.
pub fn alpha_exact_with(
    g: &Graph,
    cfg: &OracleConfig,
) -> Result<(usize, IndependentSet), OracleError> {
    let limit = cfg.max_vertices.min(MAX_ALPHA_BOUND);
    if g.n() > limit {
        return Err(OracleError::ScaleExceeded { n: g.n(), limit });
    }
    let mut solver = MisSolver {
        adj: g.adjacency_masks(),
        best: 0,
        best_size: 0,
        nodes: 0,
        cancel: cfg.cancel.as_ref(),
    };
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    solver.search(all, 0)?;
    let set = IndependentSet::new(bits(solver.best).collect());
    // Gallai: the complement of an independent set is a vertex cover.
    debug_assert!(verify_independent(g, &set));
    debug_assert!(g.edges().all(|(u, v)| !set.contains(u) || !set.contains(v)));
    Ok((set.len(), set))
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

struct MisSolver<'a> {
    adj: Vec<u64>,
    best: u64,
    best_size: u32,
    nodes: u64,
    cancel: Option<&'a CancelToken>,
}

impl MisSolver<'_> {
    fn search(&mut self, mut cand: u64, mut chosen: u64) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes % 4096 == 1 && self.cancel.is_some_and(CancelToken::is_cancelled) {
            return Err(OracleError::Cancelled);
        }
        'reduce: loop {
            for v in bits(cand) {
                if (self.adj[v] & cand).count_ones() <= 1 {
                    chosen |= 1 << v;
                    cand &= !(1 << v | self.adj[v]);
                    continue 'reduce;
                }
            }
            break;
        }
        if cand == 0 {
            if chosen.count_ones() > self.best_size {
                self.best_size = chosen.count_ones();
                self.best = chosen;
            }
            return Ok(());
        }
        if chosen.count_ones() + self.clique_cover_bound(cand) <= self.best_size {
            return Ok(());
        }
        let v = bits(cand)
            .max_by_key(|&v| ((self.adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        self.search(cand & !(1 << v | self.adj[v]), chosen | 1 << v)?;
        self.search(cand & !(1 << v), chosen)
    }

    /// Number of cliques in a greedy clique cover of `cand`; bounds α from above.
    fn clique_cover_bound(&self, cand: u64) -> u32 {
        let mut cliques: Vec<u64> = Vec::new();
        for v in bits(cand) {
            match cliques.iter_mut().find(|c| **c & !self.adj[v] == 0) {
                Some(c) => *c |= 1 << v,
                None => cliques.push(1 << v),
            }
        }
        cliques.len() as u32
    }
}

/// Independence number by plain subset enumeration, `n <= 20`.
///
/// `ok[mask]` is built from `ok[mask without its lowest vertex]`, so every
/// subset is examined exactly once.
pub fn alpha_subsets(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > ALPHA_SUBSETS_BOUND {
        return Err(OracleError::ScaleExceeded {
            n,
            limit: ALPHA_SUBSETS_BOUND,
        });
    }
    let adj = g.adjacency_masks();
    let mut ok = vec![false; 1 << n];
    ok[0] = true;
    let mut best = 0;
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        ok[mask] = ok[rest] && (adj[low] as usize & rest) == 0;
        if ok[mask] {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Matching number by exhaustive recursion, memoized on the set of still-free vertices.
pub fn mu_exact(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > MU_EXACT_BOUND {
        return Err(OracleError::ScaleExceeded {
            n,
            limit: MU_EXACT_BOUND,
        });
    }
    let adj: Vec<u32> = g.adjacency_masks().into_iter().map(|m| m as u32).collect();
    let mut memo = HashMap::new();
    let free = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Ok(mu_rec(&adj, free, &mut memo))
}

fn mu_rec(adj: &[u32], free: u32, memo: &mut HashMap<u32, usize>) -> usize {
    // drop vertices that have no free neighbor left
    let mut live = free;
    for (v, &nbrs) in adj.iter().enumerate() {
        if live >> v & 1 == 1 && nbrs & free == 0 {
            live &= !(1 << v);
        }
    }
    if live == 0 {
        return 0;
    }
    if let Some(&r) = memo.get(&live) {
        return r;
    }
    let v = live.trailing_zeros() as usize;
    // v stays unmatched ...
    let mut best = mu_rec(adj, live & !(1 << v), memo);
    // ... or is matched to one of its free neighbors
    let mut nbrs = adj[v] & live;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros();
        nbrs &= nbrs - 1;
        best = best.max(1 + mu_rec(adj, live & !(1 << v) & !(1 << w), memo));
    }
    memo.insert(live, best);
    best
}

/// Exhaustive search for an augmenting path (simple alternating path between
/// two free vertices). Exponential; meant for graphs with a dozen or so vertices.
pub fn has_augmenting_path(g: &Graph, m: &Matching) -> bool {
    let mate = m.mates(g.n());
    let mut on_path = vec![false; g.n()];
    (0..g.n()).any(|s| mate[s].is_none() && extend_alternating(g, &mate, s, s, &mut on_path))
}

/// `v` was just reached through an unmatched edge (or is the start); try to finish.
fn extend_alternating(
    g: &Graph,
    mate: &[Option<usize>],
    start: usize,
    v: usize,
    on_path: &mut [bool],
) -> bool {
    on_path[v] = true;
    let mut found = false;
    for &w in g.neighbors(v) {
        if on_path[w] || mate[v] == Some(w) {
            continue;
        }
        match mate[w] {
            None => {
                found = w != start;
            }
            Some(x) if !on_path[x] => {
                on_path[w] = true;
                found = extend_alternating(g, mate, start, x, on_path);
                on_path[w] = false;
            }
            Some(_) => {}
        }
        if found {
            break;
        }
    }
    on_path[v] = false;
    found
}
