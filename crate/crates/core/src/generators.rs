//! Seeded constructions: biregular graphs, composed special cubic graphs,
//! random cubic graphs, and an exhaustive stream of connected cubic graphs.
//!
//! Every random generator draws from `ChaCha8Rng::seed_from_u64(seed)`, so
//! equal seeds give equal graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bubbles::{generate_bubble, pair_stubs, BubbleError, BubbleSpec, CatalogBubble};
use crate::graph::{named, Graph};
use crate::recognition::{SpecialBubble, SpecialDecomposition};
use crate::structure::{is_connected, is_two_connected, Bipartition};

const RETRIES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid compose spec: {0}")]
    InvalidSpec(String),
    #[error("no valid graph after {0} attempts")]
    RetriesExhausted(usize),
    #[error(transparent)]
    Bubble(#[from] BubbleError),
}

/// Random connected `(δ, Δ)`-biregular bipartite graph with
/// `|A| = sΔ/g` vertices of degree `δ` (ids first) and `|B| = sδ/g` of
/// degree `Δ`, where `g = gcd(δ, Δ)`.
pub fn generate_biregular(
    delta: usize,
    max_degree: usize,
    scale: usize,
    seed: u64,
) -> Result<Graph, GeneratorError> {
    if delta == 0 || delta >= max_degree {
        return Err(GeneratorError::InvalidParameters(format!(
            "need 1 <= δ < Δ, got δ = {delta}, Δ = {max_degree}"
        )));
    }
    let g = gcd(delta, max_degree);
    if scale < g {
        return Err(GeneratorError::InvalidParameters(format!(
            "scale {scale} is below gcd(δ, Δ) = {g}; side B would have fewer than δ vertices"
        )));
    }
    let (a, b) = (scale * max_degree / g, scale * delta / g);
    if delta == 1 && b > 1 {
        return Err(GeneratorError::InvalidParameters(format!(
            "δ = 1 forces a union of {b} stars; only scale 1 is connected"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // A vertex i takes the δ consecutive B slots from iδ (mod |B|); the slots
    // cover each B vertex exactly Δ times and are distinct since δ ≤ |B|
    let mut edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|i| (0..delta).map(move |j| (i, a + (i * delta + j) % b)))
        .collect();
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    for _ in 0..RETRIES {
        // degree-preserving swaps (a1, b1), (a2, b2) -> (a1, b2), (a2, b1)
        for _ in 0..4 * edges.len() {
            let (x, y) = (rng.gen_range(0..edges.len()), rng.gen_range(0..edges.len()));
            let ((a1, b1), (a2, b2)) = (edges[x], edges[y]);
            if a1 == a2 || b1 == b2 || present.contains(&(a1, b2)) || present.contains(&(a2, b1)) {
                continue;
            }
            present.remove(&(a1, b1));
            present.remove(&(a2, b2));
            present.insert((a1, b2));
            present.insert((a2, b1));
            edges[x] = (a1, b2);
            edges[y] = (a2, b1);
        }
        let graph =
            Graph::from_edges(a + b, edges.iter().copied()).expect("swaps keep the graph simple");
        if is_connected(&graph) {
            return Ok(graph);
        }
    }
    Err(GeneratorError::RetriesExhausted(RETRIES))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Connected simple cubic graph from the pairing model with rejection.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if n % 2 == 1 || n < 4 {
        return Err(GeneratorError::InvalidParameters(format!(
            "cubic graphs need an even order of at least 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
    'retry: for _ in 0..RETRIES {
        stubs.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = stubs
            .chunks(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                continue 'retry;
            }
        }
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let g = Graph::from_edges(n, edges).expect("checked simple");
        if is_connected(&g) {
            return Ok(g);
        }
    }
    Err(GeneratorError::RetriesExhausted(RETRIES))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// A bipartite core plus the bubbles to hang off its deficient `I₀` vertices.
///
/// The slots are the `I₀` vertices in increasing order, each repeated
/// `3 − deg` times; bubble `j` is attached to slot `attachment[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComposeSpec {
    pub core: Graph,
    pub core_i: Vec<usize>,
    pub core_r: Vec<usize>,
    pub bubbles: Vec<BubbleSpec>,
    pub attachment: Vec<usize>,
}

impl ComposeSpec {
    /// Attaches the bubbles to the slots in order.
    pub fn new(
        core: Graph,
        core_i: Vec<usize>,
        core_r: Vec<usize>,
        bubbles: Vec<BubbleSpec>,
    ) -> Self {
        let attachment = (0..bubbles.len()).collect();
        ComposeSpec {
            core,
            core_i,
            core_r,
            bubbles,
            attachment,
        }
    }

    pub fn slots(&self) -> Vec<usize> {
        let mut i = self.core_i.clone();
        i.sort_unstable();
        i.into_iter()
            .flat_map(|v| [v].repeat(3usize.saturating_sub(self.core.degree(v))))
            .collect()
    }

    fn validate(&self) -> Result<(), GeneratorError> {
        let bad = |msg: String| Err(GeneratorError::InvalidSpec(msg));
        let n = self.core.n();
        if n == 0 || !is_connected(&self.core) {
            return bad("the core must be non-empty and connected".into());
        }
        let mut all: Vec<usize> = self.core_i.iter().chain(&self.core_r).copied().collect();
        all.sort_unstable();
        if all != (0..n).collect::<Vec<_>>() {
            return bad("I₀ and R₀ must partition the core".into());
        }
        if !Bipartition::new(self.core_i.clone(), self.core_r.clone()).is_valid_for(&self.core) {
            return bad("an edge of the core lies inside I₀ or R₀".into());
        }
        if let Some(&v) = self.core_r.iter().find(|&&v| self.core.degree(v) != 3) {
            return bad(format!(
                "R₀ vertex {v} has degree {} in the core",
                self.core.degree(v)
            ));
        }
        if let Some(&v) = self.core_i.iter().find(|&&v| self.core.degree(v) > 3) {
            return bad(format!("I₀ vertex {v} has degree above 3"));
        }
        let slots = self.slots().len();
        if slots != self.bubbles.len() {
            return bad(format!(
                "{slots} deficiency slots but {} bubbles",
                self.bubbles.len()
            ));
        }
        let mut att = self.attachment.clone();
        att.sort_unstable();
        if att != (0..slots).collect::<Vec<_>>() {
            return bad("attachment is not a bijection onto the slots".into());
        }
        Ok(())
    }
}

/// Builds the special cubic graph described by `spec` together with its
/// decomposition. Core vertices keep their ids; bubbles follow in order.
pub fn compose_special(
    spec: &ComposeSpec,
    seed: u64,
) -> Result<(Graph, SpecialDecomposition), GeneratorError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let slots = spec.slots();
    let mut edges: Vec<(usize, usize)> = spec.core.edges().collect();
    let mut n = spec.core.n();
    let mut bubbles = Vec::new();
    let mut bridges = Vec::new();
    for (j, bspec) in spec.bubbles.iter().enumerate() {
        let (b, cert) = generate_bubble(*bspec, rng.gen())?;
        if !is_two_connected(&b) {
            return Err(GeneratorError::InvalidSpec(format!(
                "bubble {j} ({bspec:?}) is not 2-connected"
            )));
        }
        let shift = n;
        edges.extend(b.edges().map(|(u, v)| (u + shift, v + shift)));
        let cert = cert.map_vertices(|v| v + shift);
        let partner = slots[spec.attachment[j]];
        edges.push((cert.contact, partner));
        bridges.push((cert.contact, partner));
        bubbles.push(SpecialBubble {
            vertices: (shift..shift + b.n()).collect(),
            certificate: cert,
        });
        n += b.n();
    }
    let g = Graph::from_edges(n, edges).expect("composition is simple");
    let mut core_i = spec.core_i.clone();
    let mut core_r = spec.core_r.clone();
    core_i.sort_unstable();
    core_r.sort_unstable();
    let d = SpecialDecomposition {
        core: (0..spec.core.n()).collect(),
        core_i,
        core_r,
        ell: bubbles.len(),
        bubbles,
        bridges,
    };
    debug_assert!(d.verify(&g), "{:?}", d.violations(&g));
    Ok((g, d))
}

/// The 2-connected bubble shapes used by [`random_compose_spec`].
fn random_bubble_spec(rng: &mut impl Rng) -> BubbleSpec {
    match rng.gen_range(0..6) {
        0 => BubbleSpec::Catalog(CatalogBubble::K4Subdivision),
        1 => BubbleSpec::Catalog(CatalogBubble::Seven),
        2 => BubbleSpec::Catalog(CatalogBubble::Nine),
        _ => BubbleSpec::Random {
            n: 2 * rng.gen_range(2..=5) + 1,
            two_connected: true,
        },
    }
}

/// A random valid [`ComposeSpec`]: a connected bipartite core with
/// `1..=4` vertices in `R₀` and `ℓ ∈ {0, 3, 6}` bubbles.
pub fn random_compose_spec(seed: u64) -> Result<ComposeSpec, GeneratorError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let r = rng.gen_range(1..=4usize);
        // ℓ = 3(|I₀| − |R₀|) since the core has 3|R₀| edges
        let t = rng.gen_range(0..=2usize);
        let i = r + t;
        // each I₀ vertex loses at most two edges, and keeps at most |R₀|
        let mut deficiency = vec![0usize; i];
        let mut left = 3 * t;
        let mut ok = true;
        while left > 0 {
            let open: Vec<usize> = (0..i).filter(|&v| deficiency[v] < 2).collect();
            let Some(&v) = open.choose(&mut rng) else {
                ok = false;
                break;
            };
            deficiency[v] += 1;
            left -= 1;
        }
        if !ok || deficiency.iter().any(|&d| 3 - d > r) {
            continue;
        }
        let i_stubs: Vec<usize> = (0..i).flat_map(|v| [v].repeat(3 - deficiency[v])).collect();
        let r_stubs: Vec<usize> = (i..i + r).flat_map(|v| [v, v, v]).collect();
        let Some(edges) = pair_stubs(&i_stubs, r_stubs, &mut rng) else {
            continue;
        };
        let core = Graph::from_edges(i + r, edges).expect("pairing is simple");
        if !is_connected(&core) {
            continue;
        }
        let bubbles: Vec<BubbleSpec> = (0..3 * t).map(|_| random_bubble_spec(&mut rng)).collect();
        let mut attachment: Vec<usize> = (0..bubbles.len()).collect();
        attachment.shuffle(&mut rng);
        return Ok(ComposeSpec {
            core,
            core_i: (0..i).collect(),
            core_r: (i..i + r).collect(),
            bubbles,
            attachment,
        });
    }
    Err(GeneratorError::RetriesExhausted(RETRIES))
}

/// `K₃,₂` core, three 5-vertex bubbles: the smallest non-bipartite special
/// graph (20 vertices, `α = μ = 9`).
pub fn smallest_special_spec() -> ComposeSpec {
    ComposeSpec::new(
        named::complete_bipartite(3, 2),
        vec![0, 1, 2],
        vec![3, 4],
        vec![BubbleSpec::Catalog(CatalogBubble::K4Subdivision); 3],
    )
}

/// `K₃,₂` core with bubbles of orders 5, 5 and 7: a 22-vertex special graph
/// with `α = μ = 10`.
pub fn alpha_ten_spec() -> ComposeSpec {
    ComposeSpec::new(
        named::complete_bipartite(3, 2),
        vec![0, 1, 2],
        vec![3, 4],
        vec![
            BubbleSpec::Catalog(CatalogBubble::K4Subdivision),
            BubbleSpec::Catalog(CatalogBubble::K4Subdivision),
            BubbleSpec::Catalog(CatalogBubble::Seven),
        ],
    )
}

impl From<CatalogBubble> for BubbleSpec {
    fn from(c: CatalogBubble) -> Self {
        BubbleSpec::Catalog(c)
    }
}

pub const ENUMERATION_RANGE: std::ops::RangeInclusive<usize> = 4..=12;

/// Streams connected cubic graphs on `n` vertices, `n` even in `4..=12`.
///
/// The stream contains every labeled graph whose labeling is a breadth-first
/// order: each vertex other than 0 has its smallest neighbor `p(v) < v`, and
/// `p` is non-decreasing. Every connected cubic graph has such a labeling,
/// so every isomorphism class appears, and no labeled graph appears twice.
pub fn enumerate_cubic_connected(n: usize) -> Result<CubicEnumerator, GeneratorError> {
    if n % 2 == 1 || !ENUMERATION_RANGE.contains(&n) {
        return Err(GeneratorError::InvalidParameters(format!(
            "enumeration supports even n in {ENUMERATION_RANGE:?}, got {n}"
        )));
    }
    Ok(CubicEnumerator::new(n))
}

struct Frame {
    /// `(existing later neighbors as a mask, number of new children)`
    choices: Vec<(u16, usize)>,
    next: usize,
    applied: Option<(u16, usize)>,
}

pub struct CubicEnumerator {
    n: usize,
    adj: Vec<u16>,
    next_id: usize,
    stack: Vec<Frame>,
}

impl CubicEnumerator {
    fn new(n: usize) -> Self {
        let mut e = CubicEnumerator {
            n,
            adj: vec![0; n],
            next_id: 1,
            stack: Vec::new(),
        };
        let root = e.frame(0);
        e.stack.push(root);
        e
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// All ways to complete the neighborhood of vertex `v`.
    fn frame(&self, v: usize) -> Frame {
        let mut choices = Vec::new();
        if v < self.next_id {
            let need = 3 - self.degree(v);
            let pending: Vec<usize> = (v + 1..self.next_id)
                .filter(|&u| self.degree(u) < 3)
                .collect();
            for mask in 0u32..1 << pending.len() {
                let s = mask.count_ones() as usize;
                if s > need || self.next_id + (need - s) > self.n {
                    continue;
                }
                let chosen = pending
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u16, |m, (_, &u)| m | 1 << u);
                choices.push((chosen, need - s));
            }
        }
        Frame {
            choices,
            next: 0,
            applied: None,
        }
    }

    fn apply(&mut self, v: usize, (chosen, k): (u16, usize)) {
        let mut mask = chosen;
        for u in self.next_id..self.next_id + k {
            mask |= 1 << u;
        }
        self.next_id += k;
        self.adj[v] |= mask;
        for u in 0..self.n {
            if mask >> u & 1 == 1 {
                self.adj[u] |= 1 << v;
            }
        }
    }

    fn undo(&mut self, v: usize, (chosen, k): (u16, usize)) {
        self.next_id -= k;
        let mut mask = chosen;
        for u in self.next_id..self.next_id + k {
            mask |= 1 << u;
        }
        self.adj[v] &= !mask;
        for u in 0..self.n {
            if mask >> u & 1 == 1 {
                self.adj[u] &= !(1 << v);
            }
        }
    }

    fn graph(&self) -> Graph {
        let adj = self
            .adj
            .iter()
            .map(|&m| (0..self.n).filter(|&u| m >> u & 1 == 1).collect())
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }
}

impl Iterator for CubicEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let v = self.stack.len().checked_sub(1)?;
            let top = self.stack.last_mut().unwrap();
            if let Some(prev) = top.applied.take() {
                self.undo(v, prev);
            }
            let top = self.stack.last_mut().unwrap();
            let Some(&choice) = top.choices.get(top.next) else {
                self.stack.pop();
                continue;
            };
            top.next += 1;
            top.applied = Some(choice);
            self.apply(v, choice);
            if v + 1 == self.n {
                if self.next_id == self.n {
                    return Some(self.graph());
                }
                continue;
            }
            let frame = self.frame(v + 1);
            self.stack.push(frame);
        }
    }
}
