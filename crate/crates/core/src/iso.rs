//! Isomorphism testing for small graphs, used to count isomorphism classes
//! of enumerated graphs.

use std::collections::{HashMap, VecDeque};

use crate::graph::Graph;

/// Per-vertex invariant: degree, edges among the neighbors, and the sizes of
/// the BFS distance layers.
fn vertex_invariant(g: &Graph, v: usize) -> Vec<usize> {
    let nbrs = g.neighbors(v);
    let inner = nbrs
        .iter()
        .enumerate()
        .map(|(i, &a)| nbrs[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
        .sum();
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::from([v]);
    dist[v] = 0;
    let mut layers = vec![1];
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                if layers.len() <= dist[w] {
                    layers.push(0);
                }
                layers[dist[w]] += 1;
                queue.push_back(w);
            }
        }
    }
    let mut out = vec![g.degree(v), inner];
    out.extend(layers);
    out
}

/// An isomorphism-invariant fingerprint of the whole graph.
pub fn graph_invariant(g: &Graph) -> Vec<Vec<usize>> {
    let mut inv: Vec<Vec<usize>> = (0..g.n()).map(|v| vertex_invariant(g, v)).collect();
    inv.sort_unstable();
    inv.insert(0, vec![g.n(), g.m()]);
    inv
}

/// Exact isomorphism test by backtracking over invariant-compatible vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let n = g.n();
    let gi: Vec<Vec<usize>> = (0..n).map(|v| vertex_invariant(g, v)).collect();
    let hi: Vec<Vec<usize>> = (0..n).map(|v| vertex_invariant(h, v)).collect();
    let (mut gs, mut hs) = (gi.clone(), hi.clone());
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return false;
    }
    let order = search_order(g);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &gi, &hi, &order, 0, &mut map, &mut used)
}

/// BFS order, each component started at its lowest id.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    gi: &[Vec<usize>],
    hi: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    // a vertex with an already mapped neighbor must go to a neighbor of its image
    let anchor = g
        .neighbors(v)
        .iter()
        .find(|&&w| map[w] != usize::MAX)
        .map(|&w| map[w]);
    let candidates: Vec<usize> = match anchor {
        Some(a) => h.neighbors(a).to_vec(),
        None => (0..h.n()).collect(),
    };
    for u in candidates {
        if used[u] || gi[v] != hi[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.has_edge(v, w) == h.has_edge(u, map[w]));
        if !consistent {
            continue;
        }
        map[v] = u;
        used[u] = true;
        if extend(g, h, gi, hi, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[u] = false;
    }
    false
}

/// Keeps one representative per isomorphism class, in first-seen order.
#[derive(Debug, Default)]
pub struct IsoClasses {
    buckets: HashMap<Vec<Vec<usize>>, Vec<usize>>,
    representatives: Vec<Graph>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns true if `g` starts a new class.
    pub fn insert(&mut self, g: &Graph) -> bool {
        let bucket = self.buckets.entry(graph_invariant(g)).or_default();
        if bucket
            .iter()
            .any(|&i| are_isomorphic(&self.representatives[i], g))
        {
            return false;
        }
        bucket.push(self.representatives.len());
        self.representatives.push(g.clone());
        true
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representatives(&self) -> &[Graph] {
        &self.representatives
    }
}
