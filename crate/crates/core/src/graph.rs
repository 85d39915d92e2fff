//! Simple undirected graphs on dense vertex ids `0..n`.

use std::fmt;

use thiserror::Error;

/// Errors raised while building or decoding a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// An immutable simple graph stored as sorted adjacency lists.
///
/// Construction rejects self-loops and parallel edges, so every `Graph`
/// value is simple and has a symmetric adjacency relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Builds a graph from sorted, symmetric adjacency lists that are known to be simple.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph { adj, m }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, l)| {
            l.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Minimum degree, or 0 for the graph without vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Maximum degree, or 0 for the graph without vertices.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            min: self.min_degree(),
            max: self.max_degree(),
            degrees: self.degrees(),
        }
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    /// The subgraph induced by `vertices`; new ids follow the sorted order of the set.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> InducedSubgraph {
        let mut to_old: Vec<usize> = vertices.to_vec();
        to_old.sort_unstable();
        to_old.dedup();
        let mut to_new = vec![None; self.n()];
        for (new, &old) in to_old.iter().enumerate() {
            to_new[old] = Some(new);
        }
        let adj = to_old
            .iter()
            .map(|&old| self.adj[old].iter().filter_map(|&w| to_new[w]).collect())
            .collect();
        InducedSubgraph {
            graph: Graph::from_adjacency_unchecked(adj),
            to_old,
            to_new,
        }
    }

    /// `self` minus the listed vertices, keeping track of the id mapping.
    pub fn without_vertices(&self, removed: &[usize]) -> InducedSubgraph {
        let mut keep = vec![true; self.n()];
        for &v in removed {
            keep[v] = false;
        }
        let kept: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        self.induced_subgraph(&kept)
    }

    /// `self` minus one edge; vertex ids are unchanged.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Graph::from_adjacency_unchecked(adj)
    }

    /// Spanning subgraph keeping only the edges accepted by `keep`.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, l)| l.iter().copied().filter(|&v| keep(u, v)).collect())
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length must equal n");
        let mut adj = vec![Vec::new(); self.n()];
        for (u, l) in self.adj.iter().enumerate() {
            adj[perm[u]] = l.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect()),
        );
        Graph::from_adjacency_unchecked(adj)
    }

    /// Adjacency rows as bitmasks; only valid for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj
            .iter()
            .map(|l| l.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub degrees: Vec<usize>,
}

/// An induced subgraph together with the id mapping back into its host.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_old[new]` is the host id of subgraph vertex `new`.
    pub to_old: Vec<usize>,
    /// `to_new[old]` is the subgraph id of host vertex `old`, if it was kept.
    pub to_new: Vec<Option<usize>>,
}

impl InducedSubgraph {
    pub fn map_to_old(&self, vertices: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = vertices.iter().map(|&v| self.to_old[v]).collect();
        out.sort_unstable();
        out
    }

    /// Maps host ids into the subgraph, or `None` if any vertex was dropped.
    pub fn map_to_new(&self, vertices: &[usize]) -> Option<Vec<usize>> {
        let mut out = vertices
            .iter()
            .map(|&v| self.to_new.get(v).copied().flatten())
            .collect::<Option<Vec<_>>>()?;
        out.sort_unstable();
        Some(out)
    }
}

/// Small named graphs used throughout the tests and the CLI.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Graph {
        Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Triangular prism: two triangles joined by a perfect matching.
    pub fn prism() -> Graph {
        Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn degree_profiles() {
        let c5 = cycle(5).degree_profile();
        assert_eq!((c5.min, c5.max), (2, 2));
        let s = star(3).degree_profile();
        assert_eq!((s.min, s.max), (1, 3));
        let p = petersen();
        assert_eq!((p.min_degree(), p.max_degree()), (3, 3));
        assert_eq!(p.m(), 15);
        assert_eq!(p.degrees().iter().sum::<usize>(), 2 * p.m());
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = complete(4);
        let sub = k4.induced_subgraph(&[0, 2, 3]);
        assert_eq!(sub.graph, complete(3));
        assert_eq!(sub.to_old, vec![0, 2, 3]);
        assert_eq!(sub.to_new[1], None);

        assert_eq!(k4.induced_subgraph(&[]).graph.n(), 0);

        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(&[1, 2, 3]).graph, path(3));
    }

    #[test]
    fn relabel_preserves_edges() {
        let g = petersen();
        let perm: Vec<usize> = (0..10).rev().collect();
        let h = g.relabel(&perm);
        for (u, v) in g.edges() {
            assert!(h.has_edge(perm[u], perm[v]));
        }
        assert_eq!(h.m(), g.m());
    }

    #[test]
    fn edge_removal() {
        let g = cycle(4).without_edge(0, 3);
        assert_eq!(g, path(4));
    }
}
