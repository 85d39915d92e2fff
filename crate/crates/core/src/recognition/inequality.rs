use serde::{Deserialize, Serialize};

use super::RecognitionError;
use crate::exact::{alpha_exact_with, mu_exact, verify_independent, IndependentSet, OracleConfig};
use crate::graph::Graph;
use crate::matching::{
    blossom_maximum_matching, hopcroft_karp, koenig_cover, Matching, VertexCover,
};
use crate::structure::Bipartition;

/// Graphs up to this order get their blossom matching number re-derived by
/// exhaustive search in [`check_inequality`].
pub const MU_CROSSCHECK_BOUND: usize = 16;

/// Both sides of `δ·α ≤ Δ·μ` with exact `α` and `μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
    pub alpha: usize,
    pub mu: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub tight: bool,
}

pub fn check_inequality(g: &Graph, cfg: &OracleConfig) -> Result<ExtremalReport, RecognitionError> {
    if g.n() == 0 {
        return Err(RecognitionError::EmptyGraph);
    }
    let (alpha, set) = alpha_exact_with(g, cfg)?;
    if !verify_independent(g, &set) {
        return Err(RecognitionError::Inconsistent(
            "oracle returned a dependent set".into(),
        ));
    }
    let mu = blossom_maximum_matching(g).len();
    if g.n() <= MU_CROSSCHECK_BOUND {
        let exhaustive = mu_exact(g)?;
        if exhaustive != mu {
            return Err(RecognitionError::Inconsistent(format!(
                "blossom μ = {mu}, exhaustive μ = {exhaustive}"
            )));
        }
    }
    let (delta, max_degree) = (g.min_degree(), g.max_degree());
    let (lhs, rhs) = (delta * alpha, max_degree * mu);
    if lhs > rhs {
        return Err(RecognitionError::InequalityViolated { lhs, rhs });
    }
    Ok(ExtremalReport {
        delta,
        max_degree,
        alpha,
        mu,
        lhs,
        rhs,
        tight: lhs == rhs,
    })
}

/// Every intermediate object of the counting argument behind the inequality.
///
/// `H` keeps the edges between a maximum independent set `I` and
/// `R = V \ I`; `M` and `U` are a maximum matching and a minimum vertex
/// cover of `H`; `k = |I ∩ U|`; `cross_edges` counts the edges between
/// `I \ U` and `U ∩ R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    pub independent_set: IndependentSet,
    pub rest: Vec<usize>,
    pub h_edges: Vec<(usize, usize)>,
    pub h_matching: Matching,
    pub h_cover: VertexCover,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
    pub alpha: usize,
    pub mu_h: usize,
    pub mu_g: usize,
    pub k: usize,
    pub cross_edges: usize,
    /// `[δ(α−k), m, Δ(μ(H)−k), Δ(μ(G)−k)]`, non-decreasing.
    pub count_chain: [usize; 4],
    /// `[δα, δα+(Δ−δ)k, Δμ(H), Δμ(G)]`, non-decreasing.
    pub bound_chain: [usize; 4],
}

impl ProofTrace {
    /// Re-derives every number from the stored sets and checks both chains.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let i = &self.independent_set;
        if !verify_independent(g, i) || i.len() != self.alpha {
            return false;
        }
        let mut rest: Vec<usize> = (0..n).filter(|&v| !i.contains(v)).collect();
        rest.sort_unstable();
        if rest != self.rest {
            return false;
        }
        let h = g.spanning_subgraph(|a, b| i.contains(a) != i.contains(b));
        if h.edges().collect::<Vec<_>>() != self.h_edges {
            return false;
        }
        if !crate::matching::is_matching_of(&h, &self.h_matching)
            || !self.h_cover.is_valid_for(&h)
            || self.h_matching.len() != self.h_cover.len()
            || self.h_matching.len() != self.mu_h
        {
            return false;
        }
        let k = i
            .vertices
            .iter()
            .filter(|&&v| self.h_cover.contains(v))
            .count();
        let u_in_r = self
            .h_cover
            .vertices
            .iter()
            .filter(|&&v| !i.contains(v))
            .count();
        let m = h
            .edges()
            .filter(|&(a, b)| {
                let (iv, rv) = if i.contains(a) { (a, b) } else { (b, a) };
                !self.h_cover.contains(iv) && self.h_cover.contains(rv)
            })
            .count();
        let (d, big) = (self.delta, self.max_degree);
        k == self.k
            && m == self.cross_edges
            && u_in_r + k == self.mu_h
            && self.mu_h <= self.mu_g
            && self.count_chain == [d * (self.alpha - k), m, big * u_in_r, big * (self.mu_g - k)]
            && self.bound_chain
                == [
                    d * self.alpha,
                    d * self.alpha + (big - d) * k,
                    big * self.mu_h,
                    big * self.mu_g,
                ]
            && self.count_chain.windows(2).all(|w| w[0] <= w[1])
            && self.bound_chain.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Builds the trace for `independent` (checked to be maximum) or for the oracle's set.
pub fn proof_trace(
    g: &Graph,
    independent: Option<IndependentSet>,
    cfg: &OracleConfig,
) -> Result<ProofTrace, RecognitionError> {
    if g.n() == 0 {
        return Err(RecognitionError::EmptyGraph);
    }
    let (alpha, oracle_set) = alpha_exact_with(g, cfg)?;
    let i = match independent {
        Some(set) => {
            if !verify_independent(g, &set) {
                return Err(RecognitionError::NotIndependent);
            }
            if set.len() != alpha {
                return Err(RecognitionError::NotMaximum {
                    given: set.len(),
                    alpha,
                });
            }
            set
        }
        None => oracle_set,
    };
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !i.contains(v)).collect();
    let h = g.spanning_subgraph(|a, b| i.contains(a) != i.contains(b));
    // searching from R puts the König cover on R wherever possible, so k is small
    let bip = Bipartition::new(rest.clone(), i.vertices.clone());
    let h_matching = hopcroft_karp(&h, &bip)?;
    let h_cover = koenig_cover(&h, &bip, &h_matching)?;
    let mu_g = blossom_maximum_matching(g).len();
    let mu_h = h_matching.len();

    let k = i.vertices.iter().filter(|&&v| h_cover.contains(v)).count();
    let cross_edges = h
        .edges()
        .filter(|&(a, b)| {
            let (iv, rv) = if i.contains(a) { (a, b) } else { (b, a) };
            !h_cover.contains(iv) && h_cover.contains(rv)
        })
        .count();
    let (delta, max_degree) = (g.min_degree(), g.max_degree());
    let trace = ProofTrace {
        h_edges: h.edges().collect(),
        count_chain: [
            delta * (alpha - k),
            cross_edges,
            max_degree * (mu_h - k),
            max_degree * (mu_g - k),
        ],
        bound_chain: [
            delta * alpha,
            delta * alpha + (max_degree - delta) * k,
            max_degree * mu_h,
            max_degree * mu_g,
        ],
        independent_set: i,
        rest,
        h_matching,
        h_cover,
        delta,
        max_degree,
        alpha,
        mu_h,
        mu_g,
        k,
        cross_edges,
    };
    if !trace.verify(g) {
        return Err(RecognitionError::Inconsistent(format!(
            "proof chains fail: {:?} / {:?}",
            trace.count_chain, trace.bound_chain
        )));
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn reports() {
        let r = check_inequality(&cycle(5), &cfg()).unwrap();
        assert_eq!(
            (r.delta, r.max_degree, r.alpha, r.mu, r.lhs, r.rhs, r.tight),
            (2, 2, 2, 2, 4, 4, true)
        );
        let r = check_inequality(&star(3), &cfg()).unwrap();
        assert_eq!((r.lhs, r.rhs, r.tight), (3, 3, true));
        let r = check_inequality(&petersen(), &cfg()).unwrap();
        assert_eq!(
            (r.alpha, r.mu, r.lhs, r.rhs, r.tight),
            (4, 5, 12, 15, false)
        );
        assert_eq!(
            check_inequality(&Graph::empty(0), &cfg()),
            Err(RecognitionError::EmptyGraph)
        );
    }

    #[test]
    fn star_trace() {
        let t = proof_trace(&star(3), Some(IndependentSet::new(vec![1, 2, 3])), &cfg()).unwrap();
        assert_eq!(t.h_edges.len(), 3);
        assert_eq!((t.h_matching.len(), t.h_cover.len()), (1, 1));
        assert_eq!(t.h_cover.vertices, vec![0]);
        assert_eq!((t.k, t.cross_edges), (0, 3));
        assert_eq!(t.count_chain, [3, 3, 3, 3]);
        assert_eq!(t.bound_chain, [3, 3, 3, 3]);
    }

    #[test]
    fn c4_trace() {
        let t = proof_trace(&cycle(4), Some(IndependentSet::new(vec![0, 2])), &cfg()).unwrap();
        assert_eq!(t.k, 0);
        assert_eq!(t.count_chain, [4, 4, 4, 4]);
    }

    #[test]
    fn c5_trace() {
        let t = proof_trace(&cycle(5), None, &cfg()).unwrap();
        assert_eq!(t.mu_h, 2);
        assert_eq!(t.bound_chain[0], 4);
        assert!(t.verify(&cycle(5)));
    }

    #[test]
    fn supplied_set_checked() {
        assert_eq!(
            proof_trace(&cycle(5), Some(IndependentSet::new(vec![0, 1])), &cfg()),
            Err(RecognitionError::NotIndependent)
        );
        assert_eq!(
            proof_trace(&cycle(6), Some(IndependentSet::new(vec![0, 3])), &cfg()),
            Err(RecognitionError::NotMaximum { given: 2, alpha: 3 })
        );
    }

    #[test]
    fn tampered_trace_fails_verification() {
        let g = petersen();
        let mut t = proof_trace(&g, None, &cfg()).unwrap();
        assert!(t.verify(&g));
        t.cross_edges += 1;
        assert!(!t.verify(&g));
    }
}
