//! Maximum matchings, König covers and Hall-deficient sets.

mod bipartite;
mod blossom;

pub use bipartite::{
    hall_violator, hopcroft_karp, koenig_cover, saturating_matching, Saturation, Side,
};
pub use blossom::blossom_maximum_matching;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("the supplied bipartition is not valid for this graph")]
    InvalidBipartition,
    #[error("matching is not maximum: cover has {cover} vertices for {matching} matching edges")]
    NotMaximum { matching: usize, cover: usize },
    #[error("the supplied matching is not a matching of this graph")]
    InvalidMatching,
}

/// A set of pairwise disjoint edges, stored as sorted `(min, max)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        Matching { edges }
    }

    /// Collects `v -- mate[v]` pairs; `mate` must be symmetric.
    pub fn from_mates(mate: &[Option<usize>]) -> Self {
        Matching::from_edges(
            mate.iter()
                .enumerate()
                .filter_map(|(v, &w)| w.filter(|&w| v < w).map(|w| (v, w))),
        )
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Partner table for a host graph on `n` vertices.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    pub fn covers(&self, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    /// Union of matchings on disjoint vertex sets.
    pub fn union(parts: impl IntoIterator<Item = Matching>) -> Self {
        Matching::from_edges(parts.into_iter().flat_map(|m| m.edges))
    }

    /// Rewrites vertex ids through `map` (e.g. from a subgraph into its host).
    pub fn map_vertices(&self, map: impl Fn(usize) -> usize) -> Self {
        Matching::from_edges(self.edges.iter().map(|&(u, v)| (map(u), map(v))))
    }
}

/// A set of vertices meeting every edge.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexCover {
    pub vertices: Vec<usize>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut inside = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() {
                return false;
            }
            inside[v] = true;
        }
        g.edges().all(|(u, v)| inside[u] || inside[v])
    }
}

/// A set `S` on one side of a bipartite graph whose neighborhood is smaller than `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallViolator {
    pub deficient_set: Vec<usize>,
    pub neighborhood: Vec<usize>,
}

impl HallViolator {
    /// Recomputes `N(S)` in `g` and checks it is exactly the stored set and smaller than `S`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.deficient_set.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut nbhd: Vec<usize> = self
            .deficient_set
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .collect();
        nbhd.sort_unstable();
        nbhd.dedup();
        nbhd == self.neighborhood && nbhd.len() < self.deficient_set.len()
    }
}

/// True iff `m` is a set of disjoint edges of `g`.
pub fn is_matching_of(g: &Graph, m: &Matching) -> bool {
    let mut used = vec![false; g.n()];
    for &(u, v) in m.edges() {
        if !g.has_edge(u, v) || used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}
