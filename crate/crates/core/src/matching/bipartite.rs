use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{is_matching_of, HallViolator, Matching, MatchingError, VertexCover};
use crate::graph::Graph;
use crate::structure::Bipartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

/// Either a matching saturating the requested side or a Hall violator on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Saturation {
    Saturating(Matching),
    Violated(HallViolator),
}

const INF: usize = usize::MAX;

/// Maximum matching of a bipartite graph.
///
/// Phases scan free A-vertices in increasing id order and neighbors in
/// sorted order, so the result is a function of the input alone.
pub fn hopcroft_karp(g: &Graph, bip: &Bipartition) -> Result<Matching, MatchingError> {
    if !bip.is_valid_for(g) {
        return Err(MatchingError::InvalidBipartition);
    }
    Ok(Matching::from_mates(&maximum_mates(g, &bip.side_a)))
}

fn maximum_mates(g: &Graph, left: &[usize]) -> Vec<Option<usize>> {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut dist = vec![INF; n];
    let mut next = vec![0usize; n];
    loop {
        // layer the A-side from the free vertices
        let mut queue = VecDeque::new();
        for &v in left {
            if mate[v].is_none() {
                dist[v] = 0;
                queue.push_back(v);
            } else {
                dist[v] = INF;
            }
        }
        let mut reachable_free = false;
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                match mate[w] {
                    None => reachable_free = true,
                    Some(u) if dist[u] == INF => {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
                    Some(_) => {}
                }
            }
        }
        if !reachable_free {
            return mate;
        }

        for &v in left {
            next[v] = 0;
        }
        for &root in left {
            if mate[root].is_some() {
                continue;
            }
            // (A-vertex, B-vertex used to leave it)
            let mut path: Vec<(usize, usize)> = Vec::new();
            let mut cur = root;
            loop {
                if next[cur] == g.degree(cur) {
                    dist[cur] = INF;
                    match path.pop() {
                        Some((prev, _)) => {
                            cur = prev;
                            continue;
                        }
                        None => break,
                    }
                }
                let w = g.neighbors(cur)[next[cur]];
                next[cur] += 1;
                match mate[w] {
                    None => {
                        path.push((cur, w));
                        for &(a, b) in &path {
                            mate[a] = Some(b);
                            mate[b] = Some(a);
                        }
                        break;
                    }
                    Some(u) if dist[u] != INF && dist[u] == dist[cur] + 1 => {
                        path.push((cur, w));
                        cur = u;
                    }
                    Some(_) => {}
                }
            }
        }
    }
}

/// Vertices reachable from the free `left` vertices by alternating paths.
fn alternating_reach(g: &Graph, left: &[usize], mate: &[Option<usize>]) -> Vec<bool> {
    let mut reached = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for &v in left {
        if mate[v].is_none() {
            reached[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if reached[w] || mate[v] == Some(w) {
                continue;
            }
            reached[w] = true;
            if let Some(u) = mate[w] {
                if !reached[u] {
                    reached[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    reached
}

/// König's construction: with `Z` the alternating-reachable set from free
/// A-vertices, the cover is `(A \ Z) ∪ (B ∩ Z)`.
///
/// Fails with [`MatchingError::NotMaximum`] if the result is not a cover of size `|m|`.
pub fn koenig_cover(
    g: &Graph,
    bip: &Bipartition,
    m: &Matching,
) -> Result<VertexCover, MatchingError> {
    if !bip.is_valid_for(g) {
        return Err(MatchingError::InvalidBipartition);
    }
    if !is_matching_of(g, m) {
        return Err(MatchingError::InvalidMatching);
    }
    let mate = m.mates(g.n());
    let z = alternating_reach(g, &bip.side_a, &mate);
    let mut vertices: Vec<usize> = bip
        .side_a
        .iter()
        .copied()
        .filter(|&v| !z[v])
        .chain(bip.side_b.iter().copied().filter(|&v| z[v]))
        .collect();
    vertices.sort_unstable();
    let cover = VertexCover { vertices };
    if cover.len() != m.len() || !cover.is_valid_for(g) {
        return Err(MatchingError::NotMaximum {
            matching: m.len(),
            cover: cover.len(),
        });
    }
    Ok(cover)
}

/// A set `S` on `side` with `|N(S)| < |S|`, or `None` if some matching saturates `side`.
pub fn hall_violator(
    g: &Graph,
    bip: &Bipartition,
    side: Side,
) -> Result<Option<HallViolator>, MatchingError> {
    match saturating_matching(g, bip, side)? {
        Saturation::Saturating(_) => Ok(None),
        Saturation::Violated(v) => Ok(Some(v)),
    }
}

pub fn saturating_matching(
    g: &Graph,
    bip: &Bipartition,
    side: Side,
) -> Result<Saturation, MatchingError> {
    if !bip.is_valid_for(g) {
        return Err(MatchingError::InvalidBipartition);
    }
    let (left, right) = match side {
        Side::A => (&bip.side_a, &bip.side_b),
        Side::B => (&bip.side_b, &bip.side_a),
    };
    let mate = maximum_mates(g, left);
    if left.iter().all(|&v| mate[v].is_some()) {
        return Ok(Saturation::Saturating(Matching::from_mates(&mate)));
    }
    let z = alternating_reach(g, left, &mate);
    let deficient_set: Vec<usize> = left.iter().copied().filter(|&v| z[v]).collect();
    let neighborhood: Vec<usize> = right.iter().copied().filter(|&v| z[v]).collect();
    debug_assert_eq!(
        neighborhood.len(),
        deficient_set.len() - left.iter().filter(|&&v| mate[v].is_none()).count()
    );
    Ok(Saturation::Violated(HallViolator {
        deficient_set,
        neighborhood,
    }))
}
