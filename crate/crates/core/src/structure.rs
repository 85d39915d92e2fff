//! Connectivity, 2-colorings and the biconnected (block) decomposition.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || connected_components(g).len() == 1
}

/// Two disjoint vertex sets such that every edge of the host graph joins them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl Bipartition {
    pub fn new(mut side_a: Vec<usize>, mut side_b: Vec<usize>) -> Self {
        side_a.sort_unstable();
        side_b.sort_unstable();
        Bipartition { side_a, side_b }
    }

    pub fn swapped(&self) -> Self {
        Bipartition {
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
        }
    }

    /// Per-vertex side lookup: `Some(false)` for A, `Some(true)` for B.
    pub fn side_lookup(&self, n: usize) -> Vec<Option<bool>> {
        let mut side = vec![None; n];
        for &v in &self.side_a {
            if v < n {
                side[v] = Some(false);
            }
        }
        for &v in &self.side_b {
            if v < n {
                side[v] = Some(true);
            }
        }
        side
    }

    /// True iff the sides partition `V(g)` and every edge crosses.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.side_a.len() + self.side_b.len() != g.n() {
            return false;
        }
        let mut side = vec![None; g.n()];
        for (s, list) in [(false, &self.side_a), (true, &self.side_b)] {
            for &v in list {
                if v >= g.n() || side[v].is_some() {
                    return false;
                }
                side[v] = Some(s);
            }
        }
        g.edges().all(|(u, v)| side[u] != side[v])
    }
}

/// Outcome of 2-coloring a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coloring {
    Bipartite(Bipartition),
    /// Vertex sequence of an odd cycle; consecutive entries and the last/first pair are adjacent.
    OddCycle(Vec<usize>),
}

/// 2-colors every component, putting each component's smallest vertex on side A.
pub fn bipartition(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => {
                        return Coloring::OddCycle(tree_cycle(v, w, &parent, &depth))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| color[v] == Some(false));
    Coloring::Bipartite(Bipartition {
        side_a: a,
        side_b: b,
    })
}

/// Closes the BFS-tree paths from `u` and `v` (same color, adjacent) into a cycle.
fn tree_cycle(mut u: usize, mut v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let mut left = vec![u];
    let mut right = vec![v];
    while depth[u] > depth[v] {
        u = parent[u];
        left.push(u);
    }
    while depth[v] > depth[u] {
        v = parent[v];
        right.push(v);
    }
    while u != v {
        u = parent[u];
        v = parent[v];
        left.push(u);
        right.push(v);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Checks that `cycle` is a simple odd cycle of `g`.
pub fn is_odd_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || k.is_multiple_of(2) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == k && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

pub fn is_bipartite(g: &Graph) -> bool {
    matches!(bipartition(g), Coloring::Bipartite(_))
}

/// A maximal 2-connected subgraph, or a bridge (a block with two vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// Indices into `blocks` for every vertex; empty for isolated vertices.
    pub membership: Vec<Vec<usize>>,
}

impl BlockCutTree {
    pub fn bridges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks
            .iter()
            .filter(|b| b.is_bridge())
            .map(|b| b.edges[0])
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.membership[v].len() >= 2
    }

    /// Cut vertices that lie in block `b`.
    pub fn cut_vertices_of(&self, b: usize) -> Vec<usize> {
        self.blocks[b]
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Blocks containing at most one cut vertex.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.cut_vertices_of(b).len() <= 1)
            .collect()
    }
}

/// Biconnected decomposition (Hopcroft–Tarjan with an explicit edge stack).
///
/// Blocks are emitted with sorted vertex and edge lists and then ordered by
/// their smallest edge, so the result depends only on the graph.
pub fn block_cut_tree(g: &Graph) -> BlockCutTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    let mut edges = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        edges.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (parent, v) {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    let mut vertices: Vec<usize> =
                        edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                    vertices.sort_unstable();
                    vertices.dedup();
                    blocks.push(Block { vertices, edges });
                }
            }
        }
    }
    blocks.sort_by_key(|b| b.edges[0]);
    let mut membership = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            membership[v].push(i);
        }
    }
    let cut_vertices = (0..n).filter(|&v| membership[v].len() >= 2).collect();
    BlockCutTree {
        blocks,
        cut_vertices,
        membership,
    }
}

/// Connected with at least three vertices and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.n() < 3 || !is_connected(g) {
        return false;
    }
    block_cut_tree(g).blocks.len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn components() {
        let g = cycle(3).disjoint_union(&cycle(4));
        let comps = connected_components(&g);
        assert_eq!(comps.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 4]);
        assert_eq!(connected_components(&petersen()).len(), 1);
        assert_eq!(connected_components(&Graph::empty(5)).len(), 5);
    }

    #[test]
    fn two_colorings() {
        match bipartition(&cycle(6)) {
            Coloring::Bipartite(b) => {
                assert_eq!(b.side_a, vec![0, 2, 4]);
                assert_eq!(b.side_b, vec![1, 3, 5]);
                assert!(b.is_valid_for(&cycle(6)));
            }
            other => panic!("{other:?}"),
        }
        match bipartition(&cycle(5)) {
            Coloring::OddCycle(c) => {
                assert_eq!(c.len(), 5);
                assert!(is_odd_cycle(&cycle(5), &c));
            }
            other => panic!("{other:?}"),
        }
        match bipartition(&complete_bipartite(3, 3)) {
            Coloring::Bipartite(b) => assert_eq!((b.side_a.len(), b.side_b.len()), (3, 3)),
            other => panic!("{other:?}"),
        }
        match bipartition(&petersen()) {
            Coloring::OddCycle(c) => assert!(is_odd_cycle(&petersen(), &c)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn canonical_sides_per_component() {
        // components {0,3} and {1,2}: each smallest vertex goes to side A
        let g = Graph::from_edges(4, [(0, 3), (1, 2)]).unwrap();
        let Coloring::Bipartite(b) = bipartition(&g) else {
            panic!()
        };
        assert_eq!(b.side_a, vec![0, 1]);
    }

    #[test]
    fn blocks_of_path_and_cycle() {
        let t = block_cut_tree(&path(4));
        assert_eq!(t.blocks.len(), 3);
        assert!(t.blocks.iter().all(Block::is_bridge));
        assert_eq!(t.cut_vertices, vec![1, 2]);

        let t = block_cut_tree(&cycle(5));
        assert_eq!(t.blocks.len(), 1);
        assert!(t.cut_vertices.is_empty());
    }

    #[test]
    fn subdivided_k4_with_pendant() {
        // K4 on {0,1,2,3} with edge 0-1 subdivided by 4, plus pendant 4-5.
        let g = Graph::from_edges(
            6,
            [
                (0, 4),
                (4, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 5),
            ],
        )
        .unwrap();
        let t = block_cut_tree(&g);
        assert_eq!(t.blocks.len(), 2);
        let big = t.blocks.iter().find(|b| !b.is_bridge()).unwrap();
        assert_eq!(big.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(t.cut_vertices, vec![4]);
        assert_eq!(t.bridges().collect::<Vec<_>>(), vec![(4, 5)]);
        assert_eq!(t.leaf_blocks().len(), 2);
    }

    #[test]
    fn block_invariants_on_petersen_plus_tail() {
        let g = Graph::from_edges(12, petersen().edges().chain([(9, 10), (10, 11)])).unwrap();
        let t = block_cut_tree(&g);
        assert_eq!(t.blocks.iter().map(|b| b.edges.len()).sum::<usize>(), g.m());
        assert_eq!(t.cut_vertices, vec![9, 10]);
        assert!(is_two_connected(&petersen()));
        assert!(!is_two_connected(&g));
    }
}
