//! Bubbles: graphs with degree sequence `3, ..., 3, 2` whose vertices split
//! into an independent set `I` and a rest `R` such that the degree-2
//! contact vertex lies in `R` and `G[R]` has exactly one edge.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::matching::{saturating_matching, Matching, Saturation, Side};
use crate::structure::{
    block_cut_tree, connected_components, is_bipartite, is_connected, is_two_connected, Bipartition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BubbleError {
    #[error("bubble recognition requires a connected graph")]
    Disconnected,
    #[error("certificate rejected: {}", fmt_violations(.0))]
    InvalidCertificate(Vec<BubbleViolation>),
    #[error("vertex {0} is not the contact vertex or an endpoint of the R-edge")]
    NotAnAnchor(usize),
    #[error("not a bubble: I cannot be saturated avoiding vertex {0}")]
    SaturationFailed(usize),
    #[error("extracted side of bridge {0}-{1} is not a bubble")]
    ExtractionFailed(usize, usize),
    #[error("unrealizable bubble request: {0}")]
    Unrealizable(String),
    #[error("random bubble generation gave up after {0} attempts")]
    RetriesExhausted(usize),
    #[error("unknown bubble catalog id {0:?}")]
    UnknownCatalog(String),
}

fn fmt_violations(v: &[BubbleViolation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Contact vertex, partition `(I, R)` and the unique edge inside `R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BubbleCertificate {
    pub contact: usize,
    pub i_part: Vec<usize>,
    pub r_part: Vec<usize>,
    pub r_edge: (usize, usize),
}

impl BubbleCertificate {
    pub fn new(
        contact: usize,
        mut i_part: Vec<usize>,
        mut r_part: Vec<usize>,
        r_edge: (usize, usize),
    ) -> Self {
        i_part.sort_unstable();
        r_part.sort_unstable();
        BubbleCertificate {
            contact,
            i_part,
            r_part,
            r_edge: (r_edge.0.min(r_edge.1), r_edge.0.max(r_edge.1)),
        }
    }

    pub fn order(&self) -> usize {
        self.i_part.len() + self.r_part.len()
    }

    /// All vertices of the bubble, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.i_part.iter().chain(&self.r_part).copied().collect();
        v.sort_unstable();
        v
    }

    pub fn map_vertices(&self, map: impl Fn(usize) -> usize) -> Self {
        BubbleCertificate::new(
            map(self.contact),
            self.i_part.iter().map(|&v| map(v)).collect(),
            self.r_part.iter().map(|&v| map(v)).collect(),
            (map(self.r_edge.0), map(self.r_edge.1)),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BubbleViolation {
    VertexOutOfRange(usize),
    NotAPartition,
    ContactNotInR,
    ContactDegree(usize),
    Degree { vertex: usize, degree: usize },
    EdgeInsideI(usize, usize),
    RInternalEdges(usize),
    REdgeMismatch,
    SizeMismatch { i: usize, r: usize },
    Bipartite,
}

impl fmt::Display for BubbleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            Self::NotAPartition => write!(f, "I and R do not partition the vertex set"),
            Self::ContactNotInR => write!(f, "contact vertex not in R"),
            Self::ContactDegree(d) => write!(f, "contact vertex has degree {d}, expected 2"),
            Self::Degree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, expected 3")
            }
            Self::EdgeInsideI(u, v) => write!(f, "edge {u}-{v} inside I"),
            Self::RInternalEdges(c) => write!(f, "{c} edges inside R, expected exactly 1"),
            Self::REdgeMismatch => write!(f, "stored R-edge is not the edge inside R"),
            Self::SizeMismatch { i, r } => {
                write!(f, "|I| = {i}, |R| = {r}, expected |R| = |I| + 1")
            }
            Self::Bipartite => write!(f, "graph is bipartite"),
        }
    }
}

/// Result of checking a certificate clause by clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BubbleCheck {
    pub violations: Vec<BubbleViolation>,
}

impl BubbleCheck {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn into_result(self) -> Result<(), BubbleError> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(BubbleError::InvalidCertificate(self.violations))
        }
    }
}

/// Checks every defining clause of a bubble with `I ∪ R = V(g)`.
pub fn verify_bubble(g: &Graph, cert: &BubbleCertificate) -> BubbleCheck {
    use BubbleViolation::*;
    let n = g.n();
    let mut violations = Vec::new();
    let all = cert.i_part.iter().chain(&cert.r_part).chain([
        &cert.contact,
        &cert.r_edge.0,
        &cert.r_edge.1,
    ]);
    let out_of_range: Vec<usize> = all.copied().filter(|&v| v >= n).collect();
    if !out_of_range.is_empty() {
        violations.extend(out_of_range.into_iter().map(VertexOutOfRange));
        return BubbleCheck { violations };
    }
    let side = Bipartition::new(cert.i_part.clone(), cert.r_part.clone()).side_lookup(n);
    let mut counted = vec![0u8; n];
    for &v in cert.i_part.iter().chain(&cert.r_part) {
        counted[v] += 1;
    }
    if counted.iter().any(|&c| c != 1) {
        violations.push(NotAPartition);
    }
    let in_r = |v: usize| side[v] == Some(true);
    let in_i = |v: usize| side[v] == Some(false);
    if !in_r(cert.contact) {
        violations.push(ContactNotInR);
    }
    if g.degree(cert.contact) != 2 {
        violations.push(ContactDegree(g.degree(cert.contact)));
    }
    for v in (0..n).filter(|&v| v != cert.contact) {
        if g.degree(v) != 3 {
            violations.push(Degree {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    let mut r_edges = Vec::new();
    for (u, v) in g.edges() {
        if in_i(u) && in_i(v) {
            violations.push(EdgeInsideI(u, v));
        }
        if in_r(u) && in_r(v) {
            r_edges.push((u, v));
        }
    }
    if r_edges.len() != 1 {
        violations.push(RInternalEdges(r_edges.len()));
    } else if r_edges[0] != cert.r_edge {
        violations.push(REdgeMismatch);
    }
    if cert.r_part.len() != cert.i_part.len() + 1 {
        violations.push(SizeMismatch {
            i: cert.i_part.len(),
            r: cert.r_part.len(),
        });
    }
    if is_bipartite(g) {
        violations.push(Bipartite);
    }
    BubbleCheck { violations }
}

/// Checks that `G[I ∪ R]` is a bubble with this certificate (ids are host ids).
pub fn verify_embedded_bubble(g: &Graph, cert: &BubbleCertificate) -> BubbleCheck {
    let verts = cert.vertices();
    if let Some(&v) = verts.iter().find(|&&v| v >= g.n()) {
        return BubbleCheck {
            violations: vec![BubbleViolation::VertexOutOfRange(v)],
        };
    }
    let sub = g.induced_subgraph(&verts);
    let local = |v: usize| sub.to_new.get(v).copied().flatten().unwrap_or(usize::MAX);
    if [cert.contact, cert.r_edge.0, cert.r_edge.1]
        .iter()
        .any(|&v| local(v) == usize::MAX)
    {
        return BubbleCheck {
            violations: vec![BubbleViolation::NotAPartition],
        };
    }
    verify_bubble(&sub.graph, &cert.map_vertices(local))
}

/// Finds a bubble certificate for a connected graph, if one exists.
///
/// With `z` the unique degree-2 vertex, each edge `xy` is tried in order:
/// if `g - xy` 2-colors with `x`, `y` and `z` on one side, that side is `R`.
pub fn recognize_bubble(g: &Graph) -> Result<Option<BubbleCertificate>, BubbleError> {
    if !is_connected(g) {
        return Err(BubbleError::Disconnected);
    }
    let mut contact = None;
    for v in 0..g.n() {
        match g.degree(v) {
            3 => {}
            2 if contact.is_none() => contact = Some(v),
            _ => return Ok(None),
        }
    }
    let Some(z) = contact else { return Ok(None) };
    for (x, y) in g.edges() {
        if let Some(color) = two_color_without_edge(g, x, y) {
            if color[y] == 0 && color[z] == 0 {
                let (r, i): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| color[v] == 0);
                return Ok(Some(BubbleCertificate::new(z, i, r, (x, y))));
            }
        }
    }
    Ok(None)
}

/// 2-colors `g - xy` giving both `x` and `y` color 0 when they end up in different
/// components; `None` if `g - xy` has an odd cycle.
fn two_color_without_edge(g: &Graph, x: usize, y: usize) -> Option<Vec<u8>> {
    let mut color = vec![u8::MAX; g.n()];
    let starts = [x, y].into_iter().chain(0..g.n());
    for s in starts {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if (v == x && w == y) || (v == y && w == x) {
                    continue;
                }
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// A matching of `g - u` saturating `I`, built from I–R edges only, for `u`
/// the contact vertex or an endpoint of the R-edge.
pub fn bubble_matching_avoiding(
    g: &Graph,
    cert: &BubbleCertificate,
    u: usize,
) -> Result<Matching, BubbleError> {
    verify_bubble(g, cert).into_result()?;
    if u != cert.contact && u != cert.r_edge.0 && u != cert.r_edge.1 {
        return Err(BubbleError::NotAnAnchor(u));
    }
    let side = Bipartition::new(cert.i_part.clone(), cert.r_part.clone()).side_lookup(g.n());
    let h = g.spanning_subgraph(|a, b| side[a] != side[b] && a != u && b != u);
    let bip = Bipartition::new(cert.i_part.clone(), cert.r_part.clone());
    match saturating_matching(&h, &bip, Side::A) {
        Ok(Saturation::Saturating(m)) => Ok(m),
        _ => Err(BubbleError::SaturationFailed(u)),
    }
}

/// A bubble strictly inside another one, as host vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubBubble {
    pub vertices: Vec<usize>,
    pub certificate: BubbleCertificate,
}

/// For a bubble that is not 2-connected, a proper induced sub-bubble whose
/// partition refines the given one; `None` for 2-connected bubbles.
pub fn extract_sub_bubble(
    g: &Graph,
    cert: &BubbleCertificate,
) -> Result<Option<SubBubble>, BubbleError> {
    verify_bubble(g, cert).into_result()?;
    if is_two_connected(g) {
        return Ok(None);
    }
    let side = Bipartition::new(cert.i_part.clone(), cert.r_part.clone()).side_lookup(g.n());
    let in_r = |v: usize| side[v] == Some(true);

    let (vertices, contact, bridge) = if !is_connected(g) {
        // the component holding the R-edge also holds the contact vertex
        let comp = connected_components(g)
            .into_iter()
            .find(|c| c.binary_search(&cert.r_edge.0).is_ok())
            .expect("every vertex lies in a component");
        (comp, cert.contact, (cert.r_edge.0, cert.r_edge.1))
    } else {
        let tree = block_cut_tree(g);
        let (a, b) = tree
            .bridges()
            .next()
            .expect("connected subcubic graph with a cut vertex has a bridge");
        let (u, v) = match (in_r(a), in_r(b)) {
            (true, false) => (a, b),
            (false, true) => (b, a),
            _ => return Err(BubbleError::ExtractionFailed(a, b)),
        };
        let without = g.without_edge(u, v);
        let comp = connected_components(&without)
            .into_iter()
            .find(|c| c.binary_search(&u).is_ok())
            .unwrap();
        (comp, u, (a, b))
    };
    let (i_part, r_part): (Vec<usize>, Vec<usize>) = vertices.iter().partition(|&&v| !in_r(v));
    let sub = BubbleCertificate::new(contact, i_part, r_part, cert.r_edge);
    let check = verify_embedded_bubble(g, &sub);
    if !check.is_ok() || sub.order() >= g.n() {
        return Err(BubbleError::ExtractionFailed(bridge.0, bridge.1));
    }
    Ok(Some(SubBubble {
        vertices,
        certificate: sub,
    }))
}

/// Hand-built bubbles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CatalogBubble {
    /// `K4` with one edge subdivided by the contact vertex, 5 vertices.
    K4Subdivision,
    /// 7 vertices; the contact vertex is an endpoint of the R-edge.
    Seven,
    /// 9 vertices, a subdivided 8-cycle with chords.
    Nine,
    /// 11 vertices; the 5-vertex bubble hangs from a bridge, so this one is not 2-connected.
    Nested,
}

/// `(n, edges, I, R, contact, R-edge)`.
type CatalogEntry = (
    usize,
    &'static [(usize, usize)],
    &'static [usize],
    &'static [usize],
    usize,
    (usize, usize),
);

impl CatalogBubble {
    pub const ALL: [CatalogBubble; 4] =
        [Self::K4Subdivision, Self::Seven, Self::Nine, Self::Nested];

    pub fn id(self) -> &'static str {
        match self {
            Self::K4Subdivision => "k4-subdivision",
            Self::Seven => "fig2-7",
            Self::Nine => "fig2-9",
            Self::Nested => "fig2-nested",
        }
    }

    pub fn build(self) -> (Graph, BubbleCertificate) {
        let (n, edges, i, r, contact, r_edge): CatalogEntry = match self {
            Self::K4Subdivision => (
                5,
                &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
                &[1, 2],
                &[0, 3, 4],
                0,
                (3, 4),
            ),
            Self::Seven => (
                7,
                &[
                    (3, 6),
                    (3, 5),
                    (2, 5),
                    (2, 6),
                    (1, 6),
                    (0, 1),
                    (0, 4),
                    (3, 4),
                    (2, 4),
                    (1, 5),
                ],
                &[1, 2, 3],
                &[0, 4, 5, 6],
                0,
                (0, 4),
            ),
            Self::Nine => (
                9,
                &[
                    (2, 8),
                    (4, 8),
                    (4, 6),
                    (5, 6),
                    (3, 5),
                    (3, 7),
                    (1, 7),
                    (0, 1),
                    (0, 2),
                    (2, 7),
                    (3, 8),
                    (4, 5),
                    (1, 6),
                ],
                &[1, 2, 3, 4],
                &[0, 5, 6, 7, 8],
                0,
                (5, 6),
            ),
            Self::Nested => (
                11,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 3),
                    (1, 4),
                    (2, 3),
                    (2, 4),
                    (3, 4),
                    (0, 5),
                    (6, 8),
                    (5, 9),
                    (7, 9),
                    (5, 8),
                    (7, 8),
                    (6, 9),
                    (7, 10),
                    (6, 10),
                ],
                &[1, 2, 5, 6, 7],
                &[0, 3, 4, 8, 9, 10],
                10,
                (3, 4),
            ),
        };
        let g = Graph::from_edges(n, edges.iter().copied()).expect("catalog edges are simple");
        (
            g,
            BubbleCertificate::new(contact, i.to_vec(), r.to_vec(), r_edge),
        )
    }
}

impl FromStr for CatalogBubble {
    type Err = BubbleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| BubbleError::UnknownCatalog(s.to_string()))
    }
}

/// What [`generate_bubble`] should build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BubbleSpec {
    Catalog(CatalogBubble),
    /// Random connected bubble of odd order `n >= 5`.
    Random {
        n: usize,
        two_connected: bool,
    },
    /// Random bubble of odd order `n >= 11` containing a smaller bubble behind a bridge.
    Nested {
        n: usize,
    },
}

impl FromStr for BubbleSpec {
    type Err = BubbleError;

    /// Accepts a catalog id, `random:N`, `random2c:N` or `nested:N`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let size = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| BubbleError::UnknownCatalog(s.to_string()))
        };
        if let Some(rest) = s.strip_prefix("random:") {
            Ok(BubbleSpec::Random {
                n: size(rest)?,
                two_connected: false,
            })
        } else if let Some(rest) = s.strip_prefix("random2c:") {
            Ok(BubbleSpec::Random {
                n: size(rest)?,
                two_connected: true,
            })
        } else if let Some(rest) = s.strip_prefix("nested:") {
            Ok(BubbleSpec::Nested { n: size(rest)? })
        } else {
            s.parse().map(BubbleSpec::Catalog)
        }
    }
}

const BUBBLE_RETRIES: usize = 10_000;

/// Builds a bubble and its certificate; random shapes are a function of `seed`.
pub fn generate_bubble(
    spec: BubbleSpec,
    seed: u64,
) -> Result<(Graph, BubbleCertificate), BubbleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let out = match spec {
        BubbleSpec::Catalog(c) => c.build(),
        BubbleSpec::Random { n, two_connected } => random_bubble(n, two_connected, &mut rng)?,
        BubbleSpec::Nested { n } => nested_bubble(n, &mut rng)?,
    };
    debug_assert!(verify_bubble(&out.0, &out.1).is_ok());
    Ok(out)
}

pub(crate) fn random_bubble(
    n: usize,
    two_connected: bool,
    rng: &mut impl Rng,
) -> Result<(Graph, BubbleCertificate), BubbleError> {
    if n.is_multiple_of(2) {
        return Err(BubbleError::Unrealizable(format!(
            "bubbles have odd order, got n = {n}"
        )));
    }
    if n < 5 {
        return Err(BubbleError::Unrealizable(format!(
            "the smallest bubble has 5 vertices, got n = {n}"
        )));
    }
    let p = (n - 1) / 2;
    // I = 0..p, R = p..n with x = p, y = p + 1
    let (x, y) = (p, p + 1);
    for _ in 0..BUBBLE_RETRIES {
        let contact_on_edge = p >= 3 && rng.gen_bool(0.5);
        let z = if contact_on_edge { x } else { p + 2 };
        let r_stubs: Vec<usize> = (p..n)
            .flat_map(|v| {
                let d = 3 - usize::from(v == x || v == y) - usize::from(v == z);
                std::iter::repeat_n(v, d)
            })
            .collect();
        let i_stubs: Vec<usize> = (0..p).flat_map(|v| [v; 3]).collect();
        let Some(mut edges) = pair_stubs(&i_stubs, r_stubs, rng) else {
            continue;
        };
        edges.push((x, y));
        let g = Graph::from_edges(n, edges).expect("stub pairing produced a simple graph");
        if !is_connected(&g) || (two_connected && !is_two_connected(&g)) {
            continue;
        }
        let cert = BubbleCertificate::new(z, (0..p).collect(), (p..n).collect(), (x, y));
        return Ok((g, cert));
    }
    Err(BubbleError::RetriesExhausted(BUBBLE_RETRIES))
}

/// Random perfect pairing of two equal-length stub lists; `None` on a repeated pair.
pub(crate) fn pair_stubs(
    left: &[usize],
    mut right: Vec<usize>,
    rng: &mut impl Rng,
) -> Option<Vec<(usize, usize)>> {
    debug_assert_eq!(left.len(), right.len());
    right.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = left.iter().copied().zip(right).collect();
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    edges.sort_unstable();
    Some(edges)
}

/// A bubble wrapped in a bipartite shell: the inner contact is joined by a
/// bridge to a shell vertex of `I`, and a shell vertex of `R` becomes the new contact.
fn nested_bubble(n: usize, rng: &mut impl Rng) -> Result<(Graph, BubbleCertificate), BubbleError> {
    if n.is_multiple_of(2) || n < 11 {
        return Err(BubbleError::Unrealizable(format!(
            "nested bubbles have odd order at least 11, got n = {n}"
        )));
    }
    let shell = rng.gen_range(3..=(n - 5) / 2);
    let inner_n = n - 2 * shell;
    let (inner, inner_cert) = if inner_n >= 11 && rng.gen_bool(0.5) {
        nested_bubble(inner_n, rng)?
    } else {
        random_bubble(inner_n, false, rng)?
    };
    // shell I' = inner_n..inner_n+shell (first one takes the bridge), R' after it (first one is the contact)
    let i0 = inner_n;
    let r0 = inner_n + shell;
    for _ in 0..BUBBLE_RETRIES {
        let i_stubs: Vec<usize> = (i0..r0)
            .flat_map(|v| std::iter::repeat_n(v, if v == i0 { 2 } else { 3 }))
            .collect();
        let r_stubs: Vec<usize> = (r0..n)
            .flat_map(|v| std::iter::repeat_n(v, if v == r0 { 2 } else { 3 }))
            .collect();
        let Some(shell_edges) = pair_stubs(&i_stubs, r_stubs, rng) else {
            continue;
        };
        let edges = inner
            .edges()
            .chain(shell_edges)
            .chain([(inner_cert.contact, i0)]);
        let g = Graph::from_edges(n, edges).expect("shell edges are simple");
        if !is_connected(&g) {
            continue;
        }
        let cert = BubbleCertificate::new(
            r0,
            inner_cert.i_part.iter().copied().chain(i0..r0).collect(),
            inner_cert.r_part.iter().copied().chain(r0..n).collect(),
            inner_cert.r_edge,
        );
        return Ok((g, cert));
    }
    Err(BubbleError::RetriesExhausted(BUBBLE_RETRIES))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn k4_sub() -> (Graph, BubbleCertificate) {
        CatalogBubble::K4Subdivision.build()
    }

    #[test]
    fn catalog_entries_verify() {
        for c in CatalogBubble::ALL {
            let (g, cert) = c.build();
            let check = verify_bubble(&g, &cert);
            assert!(check.is_ok(), "{}: {:?}", c.id(), check.violations);
            assert_eq!(cert.i_part.len(), (g.n() - 1) / 2);
            assert_eq!(c.id().parse::<CatalogBubble>().unwrap(), c);
        }
        assert!(is_two_connected(&CatalogBubble::Nine.build().0));
        assert!(!is_two_connected(&CatalogBubble::Nested.build().0));
    }

    #[test]
    fn swapped_partition_fails() {
        let (g, cert) = k4_sub();
        let swapped = BubbleCertificate::new(
            cert.contact,
            cert.r_part.clone(),
            cert.i_part.clone(),
            cert.r_edge,
        );
        let check = verify_bubble(&g, &swapped);
        assert!(!check.is_ok());
        assert!(check
            .violations
            .contains(&BubbleViolation::EdgeInsideI(3, 4)));
        assert!(check.violations.contains(&BubbleViolation::ContactNotInR));
    }

    #[test]
    fn cycle_is_not_a_bubble() {
        let c5 = cycle(5);
        let cert = BubbleCertificate::new(0, vec![1, 3], vec![0, 2, 4], (0, 4));
        let check = verify_bubble(&c5, &cert);
        assert!(check
            .violations
            .iter()
            .any(|v| matches!(v, BubbleViolation::Degree { .. })));
        assert_eq!(recognize_bubble(&c5).unwrap(), None);
    }

    #[test]
    fn recognizes_k4_subdivision() {
        let (g, _) = k4_sub();
        let cert = recognize_bubble(&g).unwrap().unwrap();
        assert!(verify_bubble(&g, &cert).is_ok());
        assert_eq!((cert.i_part.len(), cert.r_part.len()), (2, 3));
        assert_eq!(cert.contact, 0);
    }

    #[test]
    fn recognition_rejects() {
        assert_eq!(recognize_bubble(&complete_bipartite(3, 3)).unwrap(), None);
        assert_eq!(
            recognize_bubble(&cycle(3).disjoint_union(&cycle(3))),
            Err(BubbleError::Disconnected)
        );
    }

    #[test]
    fn recognition_handles_bridge_r_edge() {
        // Two K4-subdivision-like halves where the R-edge is a bridge is impossible
        // (parity), but the nested catalog bubble has a bridge and must still be found.
        let (g, _) = CatalogBubble::Nested.build();
        let cert = recognize_bubble(&g).unwrap().unwrap();
        assert!(verify_bubble(&g, &cert).is_ok());
    }

    #[test]
    fn avoiding_matchings() {
        for c in CatalogBubble::ALL {
            let (g, cert) = c.build();
            for u in [cert.contact, cert.r_edge.0, cert.r_edge.1] {
                let m = bubble_matching_avoiding(&g, &cert, u).unwrap();
                assert_eq!(m.len(), (g.n() - 1) / 2);
                assert!(!m.covers(u));
                assert!(cert.i_part.iter().all(|&v| m.covers(v)));
            }
            let other = cert.i_part[0];
            assert_eq!(
                bubble_matching_avoiding(&g, &cert, other),
                Err(BubbleError::NotAnAnchor(other))
            );
        }
    }

    #[test]
    fn k4_avoiding_contact_stays_inside_k4() {
        let (g, cert) = k4_sub();
        let m = bubble_matching_avoiding(&g, &cert, 0).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.edges().iter().all(|&(a, b)| a != 0 && b != 0));
    }

    #[test]
    fn sub_bubbles() {
        let (g, cert) = k4_sub();
        assert_eq!(extract_sub_bubble(&g, &cert).unwrap(), None);

        let (g, cert) = CatalogBubble::Nested.build();
        let sub = extract_sub_bubble(&g, &cert).unwrap().unwrap();
        assert_eq!(sub.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(sub.certificate.contact, 0);
        assert!(verify_embedded_bubble(&g, &sub.certificate).is_ok());
    }

    #[test]
    fn disconnected_bubble_component() {
        let (b, cert) = k4_sub();
        let g = b.disjoint_union(&complete_bipartite(3, 3));
        let cert = BubbleCertificate::new(
            cert.contact,
            cert.i_part.iter().copied().chain(5..8).collect(),
            cert.r_part.iter().copied().chain(8..11).collect(),
            cert.r_edge,
        );
        assert!(verify_bubble(&g, &cert).is_ok());
        let sub = extract_sub_bubble(&g, &cert).unwrap().unwrap();
        assert_eq!(sub.vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn generation() {
        assert!(matches!(
            generate_bubble(
                BubbleSpec::Random {
                    n: 8,
                    two_connected: false
                },
                1
            ),
            Err(BubbleError::Unrealizable(_))
        ));
        assert!(generate_bubble(
            BubbleSpec::Random {
                n: 3,
                two_connected: false
            },
            1
        )
        .is_err());
        for n in (5..=21).step_by(2) {
            for seed in 0..5 {
                let (g, cert) = generate_bubble(
                    BubbleSpec::Random {
                        n,
                        two_connected: seed % 2 == 0,
                    },
                    seed,
                )
                .unwrap();
                assert!(verify_bubble(&g, &cert).is_ok());
                assert!(is_connected(&g));
                if seed % 2 == 0 {
                    assert!(is_two_connected(&g));
                }
            }
        }
        for n in (11..=21).step_by(2) {
            for seed in 0..5 {
                let (g, cert) = generate_bubble(BubbleSpec::Nested { n }, seed).unwrap();
                assert_eq!(g.n(), n);
                assert!(verify_bubble(&g, &cert).is_ok());
                assert!(!is_two_connected(&g));
            }
        }
        let a = generate_bubble("random:15".parse().unwrap(), 9).unwrap();
        let b = generate_bubble("random:15".parse().unwrap(), 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            "fig2-7".parse::<BubbleSpec>().unwrap(),
            BubbleSpec::Catalog(CatalogBubble::Seven)
        );
        assert!("fig9".parse::<BubbleSpec>().is_err());
    }
}
