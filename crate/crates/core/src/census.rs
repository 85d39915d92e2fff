//! Corpus sweeps: the inequality and its equality cases over exhaustive and
//! random graph families, and the special-graph characterization over all
//! small connected cubic graphs.
//!
//! With the `parallel` feature the sweeps run on rayon; every `*_sequential`
//! function computes the same result on the calling thread.

use serde::{Deserialize, Serialize};

use crate::exact::{alpha_exact, OracleError};
use crate::formats::serialize_graph6;
use crate::generators::{enumerate_cubic_connected, GeneratorError};
use crate::graph::Graph;
use crate::iso::IsoClasses;
use crate::matching::blossom_maximum_matching;
use crate::recognition::{
    build_witnesses, recognize_biregular_extremal, recognize_special, BiregularOutcome,
};

/// Applies `f` to every item, keeping input order.
#[cfg(feature = "parallel")]
pub fn map_ordered<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    map_ordered_sequential(items, f)
}

pub fn map_ordered_sequential<T, R>(items: &[T], f: impl Fn(&T) -> R) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Runs `f` with at most `jobs` worker threads (`None` keeps the default pool).
#[cfg(feature = "parallel")]
pub fn with_threads<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<R: Send>(_jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    f()
}

/// Outcome of the inequality and its equality case on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InequalityOutcome {
    pub lhs: usize,
    pub rhs: usize,
    /// `Some(recognized)` when `δ < Δ`.
    pub biregular: Option<bool>,
}

pub fn inequality_outcome(g: &Graph) -> Result<InequalityOutcome, OracleError> {
    let (alpha, _) = alpha_exact(g)?;
    let mu = blossom_maximum_matching(g).len();
    let (delta, max_degree) = (g.min_degree(), g.max_degree());
    let biregular = (delta < max_degree).then(|| {
        matches!(
            recognize_biregular_extremal(g),
            Ok(BiregularOutcome::Extremal(_))
        )
    });
    Ok(InequalityOutcome {
        lhs: delta * alpha,
        rhs: max_degree * mu,
        biregular,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub graphs: u64,
    pub tight: u64,
    /// Graphs with `δα > Δμ`.
    pub violations: u64,
    /// Graphs with `δ < Δ`.
    pub unequal_degrees: u64,
    pub biregular: u64,
    /// `δ < Δ` graphs where tightness and biregular recognition disagree.
    pub equality_mismatches: u64,
    /// graph6 of the first few offending graphs.
    pub examples: Vec<String>,
}

const MAX_EXAMPLES: usize = 5;

impl SweepSummary {
    fn record(&mut self, g: &Graph, o: &InequalityOutcome) {
        self.graphs += 1;
        let tight = o.lhs == o.rhs;
        self.tight += u64::from(tight);
        let mut bad = o.lhs > o.rhs;
        self.violations += u64::from(o.lhs > o.rhs);
        if let Some(recognized) = o.biregular {
            self.unequal_degrees += 1;
            self.biregular += u64::from(recognized);
            if recognized != tight {
                self.equality_mismatches += 1;
                bad = true;
            }
        }
        if bad && self.examples.len() < MAX_EXAMPLES {
            self.examples.push(serialize_graph6(g));
        }
    }

    pub fn merge(mut self, other: SweepSummary) -> SweepSummary {
        self.graphs += other.graphs;
        self.tight += other.tight;
        self.violations += other.violations;
        self.unequal_degrees += other.unequal_degrees;
        self.biregular += other.biregular;
        self.equality_mismatches += other.equality_mismatches;
        self.examples.extend(other.examples);
        self.examples.truncate(MAX_EXAMPLES);
        self
    }

    pub fn is_clean(&self) -> bool {
        self.violations == 0 && self.equality_mismatches == 0
    }
}

/// Decodes edge-subset `mask` over the pairs `(0,1), (0,2), (1,2), (0,3), ...`
/// if the resulting graph is connected.
fn connected_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Option<Graph> {
    let mut rows = [0u64; 64];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let (mut seen, mut frontier) = (1u64, 1u64);
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = rows[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    if seen != full {
        return None;
    }
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p);
    Some(Graph::from_edges(n, edges).expect("pairs are distinct"))
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

fn sweep_mask(n: usize, pairs: &[(usize, usize)], mask: u64, acc: &mut SweepSummary) {
    if let Some(g) = connected_from_mask(n, pairs, mask) {
        let o = inequality_outcome(&g).expect("n is far below oracle scale");
        acc.record(&g, &o);
    }
}

/// Every connected labeled graph on `n <= 8` vertices.
#[cfg(feature = "parallel")]
pub fn sweep_connected(n: usize) -> SweepSummary {
    use rayon::prelude::*;
    assert!(
        (1..=8).contains(&n),
        "exhaustive sweep supports 1 <= n <= 8"
    );
    let pairs = pairs(n);
    (0..1u64 << pairs.len())
        .into_par_iter()
        .fold(SweepSummary::default, |mut acc, mask| {
            sweep_mask(n, &pairs, mask, &mut acc);
            acc
        })
        .reduce(SweepSummary::default, SweepSummary::merge)
}

#[cfg(not(feature = "parallel"))]
pub fn sweep_connected(n: usize) -> SweepSummary {
    sweep_connected_sequential(n)
}

pub fn sweep_connected_sequential(n: usize) -> SweepSummary {
    assert!(
        (1..=8).contains(&n),
        "exhaustive sweep supports 1 <= n <= 8"
    );
    let pairs = pairs(n);
    let mut acc = SweepSummary::default();
    for mask in 0..1u64 << pairs.len() {
        sweep_mask(n, &pairs, mask, &mut acc);
    }
    acc
}

/// Sweeps an explicit corpus.
pub fn sweep_graphs(graphs: &[Graph]) -> Result<SweepSummary, OracleError> {
    let outcomes = map_ordered(graphs, inequality_outcome);
    let mut acc = SweepSummary::default();
    for (g, o) in graphs.iter().zip(outcomes) {
        acc.record(g, &o?);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicSummary {
    pub n: usize,
    pub graphs: u64,
    /// Isomorphism classes, when counted.
    pub classes: Option<usize>,
    pub special: u64,
    /// Graphs with `α = μ`.
    pub alpha_equals_mu: u64,
    /// Graphs where recognition and `α = μ` disagree.
    pub mismatches: u64,
    /// Recognized graphs whose witnesses failed or missed `μ`.
    pub witness_failures: u64,
    pub examples: Vec<String>,
}

#[derive(Debug, Clone, Copy)]
struct CubicOutcome {
    special: bool,
    equal: bool,
    witness_ok: bool,
}

fn cubic_outcome(g: &Graph) -> CubicOutcome {
    let alpha = alpha_exact(g).expect("n <= 12").0;
    let mu = blossom_maximum_matching(g).len();
    let decomposition = recognize_special(g).expect("enumerated graphs are connected and cubic");
    let witness_ok = decomposition
        .as_ref()
        .is_none_or(|d| build_witnesses(g, d).is_ok_and(|w| w.verify(g) && w.size() == mu));
    CubicOutcome {
        special: decomposition.is_some(),
        equal: alpha == mu,
        witness_ok,
    }
}

const CHUNK: usize = 1 << 14;

/// Checks special recognition against `α = μ` on every enumerated connected
/// cubic graph of order `n`.
pub fn cubic_sweep(n: usize, count_classes: bool) -> Result<CubicSummary, GeneratorError> {
    cubic_sweep_with(n, count_classes, |chunk| map_ordered(chunk, cubic_outcome))
}

pub fn cubic_sweep_sequential(
    n: usize,
    count_classes: bool,
) -> Result<CubicSummary, GeneratorError> {
    cubic_sweep_with(n, count_classes, |chunk| {
        map_ordered_sequential(chunk, cubic_outcome)
    })
}

fn cubic_sweep_with(
    n: usize,
    count_classes: bool,
    run: impl Fn(&[Graph]) -> Vec<CubicOutcome>,
) -> Result<CubicSummary, GeneratorError> {
    let mut stream = enumerate_cubic_connected(n)?;
    let mut summary = CubicSummary {
        n,
        ..CubicSummary::default()
    };
    let mut classes = IsoClasses::new();
    loop {
        let chunk: Vec<Graph> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        for (g, o) in chunk.iter().zip(run(&chunk)) {
            summary.graphs += 1;
            summary.special += u64::from(o.special);
            summary.alpha_equals_mu += u64::from(o.equal);
            let mismatch = o.special != o.equal;
            summary.mismatches += u64::from(mismatch);
            summary.witness_failures += u64::from(!o.witness_ok);
            if (mismatch || !o.witness_ok) && summary.examples.len() < MAX_EXAMPLES {
                summary.examples.push(serialize_graph6(g));
            }
            if count_classes {
                classes.insert(g);
            }
        }
    }
    summary.classes = count_classes.then(|| classes.len());
    Ok(summary)
}
