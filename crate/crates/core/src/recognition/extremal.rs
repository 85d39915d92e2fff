use serde::{Deserialize, Serialize};

use super::biregular::{
    recognize_biregular_extremal, BiregularCertificate, BiregularFailure, BiregularOutcome,
};
use super::inequality::{check_inequality, ExtremalReport};
use super::special::{build_witnesses, recognize_special, SpecialDecomposition, WitnessPair};
use super::RecognitionError;
use crate::exact::{alpha_exact_with, OracleConfig, OracleError};
use crate::graph::Graph;
use crate::matching::{blossom_maximum_matching, is_matching_of, Matching};
use crate::structure::connected_components;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// `δα = Δμ`, certified structurally.
    Tight,
    /// `δα < Δμ`.
    Strict,
    /// The document carries no inequality verdict (bubble certificates).
    NotApplicable,
    /// `δ = Δ ≥ 4`: exact values only, no structural characterization.
    OracleOnly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Tight => "tight",
            Verdict::Strict => "strict",
            Verdict::NotApplicable => "not-applicable",
            Verdict::OracleOnly => "oracle-only",
        }
    }
}

/// `α` and `lhs` are absent when `α` was neither forced by a certificate
/// nor within oracle scale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantities {
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
    pub alpha: Option<usize>,
    pub mu: usize,
    pub lhs: Option<usize>,
    pub rhs: usize,
}

impl Quantities {
    fn new(g: &Graph, alpha: Option<usize>, mu: usize) -> Self {
        let (delta, max_degree) = (g.min_degree(), g.max_degree());
        Quantities {
            delta,
            max_degree,
            alpha,
            mu,
            lhs: alpha.map(|a| delta * a),
            rhs: max_degree * mu,
        }
    }
}

/// Vertex sequences of the cycles making up a 2-regular graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCover {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleCover {
    pub fn verify(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        let mut length = 0;
        for c in &self.cycles {
            if c.len() < 3 {
                return false;
            }
            for (i, &v) in c.iter().enumerate() {
                if v >= g.n() || seen[v] || !g.has_edge(v, c[(i + 1) % c.len()]) {
                    return false;
                }
                seen[v] = true;
            }
            length += c.len();
        }
        length == g.n() && g.m() == g.n() && seen.iter().all(|&s| s)
    }
}

/// One connected component of a cubic graph with its decomposition and
/// witnesses, all in host vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialComponent {
    pub decomposition: SpecialDecomposition,
    pub witnesses: WitnessPair,
}

impl SpecialComponent {
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .decomposition
            .core
            .iter()
            .chain(
                self.decomposition
                    .bubbles
                    .iter()
                    .flat_map(|b| b.vertices.iter()),
            )
            .copied()
            .collect();
        vs.sort_unstable();
        vs
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        if vs.iter().any(|&v| v >= g.n()) || vs.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let sub = g.induced_subgraph(&vs);
        let local = |v: usize| sub.to_new.get(v).copied().flatten().unwrap_or(usize::MAX);
        let in_component = |v: &usize| sub.to_new[*v].is_some();
        // a cubic induced subgraph of a cubic graph is a union of components
        self.witnesses
            .independent_set
            .vertices
            .iter()
            .all(in_component)
            && self
                .witnesses
                .matching
                .edges()
                .iter()
                .all(|(u, v)| in_component(u) && in_component(v))
            && self.decomposition.map_vertices(local).verify(&sub.graph)
            && self.witnesses.verify(g)
            && self.witnesses.size() == self.decomposition.witness_size()
    }
}

/// Why the inequality is or is not tight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    /// `δ = Δ = 0`.
    Edgeless,
    /// `δ = Δ = 1`: the edges themselves form a perfect matching.
    PerfectMatching {
        matching: Matching,
    },
    /// `δ = Δ = 2`.
    Cycles {
        cover: CycleCover,
    },
    Biregular {
        certificate: BiregularCertificate,
    },
    BiregularFailure {
        failure: BiregularFailure,
    },
    /// One decomposition per component of a cubic graph.
    Special {
        components: Vec<SpecialComponent>,
    },
    /// A component of a cubic graph admitting no special decomposition.
    NotSpecial {
        component: Vec<usize>,
    },
    Oracle {
        report: ExtremalReport,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalVerdict {
    pub verdict: Verdict,
    pub quantities: Quantities,
    pub evidence: Evidence,
}

impl ExtremalVerdict {
    /// Re-checks the evidence and the quantities against `g`.
    ///
    /// `α` is trusted where it is only an oracle output; everything else is
    /// recomputed.
    pub fn verify(&self, g: &Graph) -> bool {
        let q = &self.quantities;
        let mu = blossom_maximum_matching(g).len();
        if q.delta != g.min_degree()
            || q.max_degree != g.max_degree()
            || q.mu != mu
            || q.rhs != q.max_degree * q.mu
            || q.lhs != q.alpha.map(|a| q.delta * a)
        {
            return false;
        }
        let tight = q.lhs == Some(q.rhs);
        let evidence_ok = match &self.evidence {
            Evidence::Edgeless => g.m() == 0 && q.alpha == Some(g.n()),
            Evidence::PerfectMatching { matching } => {
                g.is_regular(1)
                    && is_matching_of(g, matching)
                    && matching.len() == g.m()
                    && q.alpha == Some(g.m())
            }
            Evidence::Cycles { cover } => {
                g.is_regular(2)
                    && cover.verify(g)
                    && q.alpha == Some(cover.cycles.iter().map(|c| c.len() / 2).sum())
            }
            Evidence::Biregular { certificate } => {
                certificate.verify(g)
                    && q.alpha == Some(certificate.alpha())
                    && q.mu == certificate.mu()
            }
            Evidence::BiregularFailure { failure } => {
                q.delta < q.max_degree
                    && match *failure {
                        BiregularFailure::DegreeOutside { vertex, degree } => {
                            vertex < g.n()
                                && g.degree(vertex) == degree
                                && degree != q.delta
                                && degree != q.max_degree
                        }
                        BiregularFailure::SameClassEdge { u, v, degree } => {
                            u < g.n()
                                && v < g.n()
                                && g.has_edge(u, v)
                                && g.degree(u) == degree
                                && g.degree(v) == degree
                        }
                    }
            }
            Evidence::Special { components } => {
                let mut covered: Vec<usize> =
                    components.iter().flat_map(|c| c.vertices()).collect();
                covered.sort_unstable();
                g.is_regular(3)
                    && covered == (0..g.n()).collect::<Vec<_>>()
                    && components.iter().all(|c| c.verify(g))
                    && q.alpha == Some(components.iter().map(|c| c.witnesses.size()).sum())
            }
            Evidence::NotSpecial { component } => {
                g.is_regular(3)
                    && connected_components(g).contains(component)
                    && matches!(
                        recognize_special(&g.induced_subgraph(component).graph),
                        Ok(None)
                    )
            }
            Evidence::Oracle { report } => {
                report.delta == q.delta
                    && report.max_degree == q.max_degree
                    && report.mu == q.mu
                    && Some(report.alpha) == q.alpha
                    && report.tight == tight
            }
        };
        let verdict_ok = match self.verdict {
            Verdict::Tight => tight,
            Verdict::Strict => !tight && q.lhs.is_none_or(|l| l < q.rhs),
            Verdict::OracleOnly => matches!(self.evidence, Evidence::Oracle { .. }),
            Verdict::NotApplicable => false,
        };
        evidence_ok && verdict_ok
    }
}

/// Decides whether `δα = Δμ` for `g`, with a structural certificate whenever
/// one is known.
///
/// `δ < Δ` uses the biregular characterization, `δ = Δ ≤ 2` is always
/// tight, `δ = Δ = 3` is decided per component by special decompositions,
/// and `δ = Δ ≥ 4` falls back to the exact oracle. For strict verdicts `α`
/// is filled in by the oracle when `g` is within `cfg`.
pub fn is_extremal(g: &Graph, cfg: &OracleConfig) -> Result<ExtremalVerdict, RecognitionError> {
    if g.n() == 0 {
        return Err(RecognitionError::EmptyGraph);
    }
    let (delta, max_degree) = (g.min_degree(), g.max_degree());
    let tight = |alpha: usize, mu: usize, evidence: Evidence| ExtremalVerdict {
        verdict: Verdict::Tight,
        quantities: Quantities::new(g, Some(alpha), mu),
        evidence,
    };

    if delta < max_degree {
        return match recognize_biregular_extremal(g)? {
            BiregularOutcome::Extremal(certificate) => Ok(tight(
                certificate.alpha(),
                certificate.mu(),
                Evidence::Biregular { certificate },
            )),
            BiregularOutcome::NotExtremal(failure) => {
                strict(g, cfg, Evidence::BiregularFailure { failure })
            }
        };
    }
    match delta {
        0 => Ok(tight(g.n(), 0, Evidence::Edgeless)),
        1 => {
            let matching = Matching::from_edges(g.edges());
            Ok(tight(
                matching.len(),
                matching.len(),
                Evidence::PerfectMatching { matching },
            ))
        }
        2 => {
            let cycles: Vec<Vec<usize>> = connected_components(g)
                .iter()
                .map(|c| walk_cycle(g, c[0]))
                .collect();
            let half: usize = cycles.iter().map(|c| c.len() / 2).sum();
            Ok(tight(
                half,
                half,
                Evidence::Cycles {
                    cover: CycleCover { cycles },
                },
            ))
        }
        3 => {
            let mut components = Vec::new();
            for comp in connected_components(g) {
                let sub = g.induced_subgraph(&comp);
                let Some(d) = recognize_special(&sub.graph)? else {
                    return strict(g, cfg, Evidence::NotSpecial { component: comp });
                };
                let witnesses = build_witnesses(&sub.graph, &d)?;
                components.push(SpecialComponent {
                    decomposition: d.map_vertices(|v| sub.to_old[v]),
                    witnesses: witnesses.map_vertices(|v| sub.to_old[v]),
                });
            }
            let size: usize = components.iter().map(|c| c.witnesses.size()).sum();
            let mu = blossom_maximum_matching(g).len();
            if mu != size {
                return Err(RecognitionError::Inconsistent(format!(
                    "special witnesses have size {size} but μ = {mu}"
                )));
            }
            Ok(tight(size, size, Evidence::Special { components }))
        }
        _ => {
            let report = check_inequality(g, cfg)?;
            Ok(ExtremalVerdict {
                verdict: Verdict::OracleOnly,
                quantities: Quantities::new(g, Some(report.alpha), report.mu),
                evidence: Evidence::Oracle { report },
            })
        }
    }
}

fn strict(
    g: &Graph,
    cfg: &OracleConfig,
    evidence: Evidence,
) -> Result<ExtremalVerdict, RecognitionError> {
    let mu = blossom_maximum_matching(g).len();
    let alpha = match alpha_exact_with(g, cfg) {
        Ok((alpha, _)) => Some(alpha),
        Err(OracleError::ScaleExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let quantities = Quantities::new(g, alpha, mu);
    if let Some(lhs) = quantities.lhs {
        if lhs >= quantities.rhs {
            return Err(RecognitionError::Inconsistent(format!(
                "structurally non-extremal but δα = {lhs}, Δμ = {}",
                quantities.rhs
            )));
        }
    }
    Ok(ExtremalVerdict {
        verdict: Verdict::Strict,
        quantities,
        evidence,
    })
}

/// Walks the cycle through `start` in a 2-regular graph.
fn walk_cycle(g: &Graph, start: usize) -> Vec<usize> {
    let mut cycle = vec![start];
    let (mut prev, mut cur) = (start, g.neighbors(start)[0]);
    while cur != start {
        cycle.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .unwrap();
        prev = cur;
        cur = next;
    }
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn run(g: &Graph) -> ExtremalVerdict {
        let v = is_extremal(g, &OracleConfig::default()).unwrap();
        assert!(v.verify(g), "{v:?}");
        v
    }

    #[test]
    fn cycles_are_tight() {
        let g = cycle(7).disjoint_union(&cycle(4));
        let v = run(&g);
        assert_eq!(v.verdict, Verdict::Tight);
        assert_eq!(v.quantities.alpha, Some(5));
        assert_eq!(v.quantities.mu, 5);
        let Evidence::Cycles { cover } = &v.evidence else {
            panic!()
        };
        assert_eq!(cover.cycles.len(), 2);
    }

    #[test]
    fn star_is_biregular() {
        let v = run(&star(3));
        assert_eq!(v.verdict, Verdict::Tight);
        assert!(matches!(v.evidence, Evidence::Biregular { .. }));
        assert_eq!((v.quantities.lhs, v.quantities.rhs), (Some(3), 3));
    }

    #[test]
    fn path_is_strict() {
        let v = run(&path(4));
        assert_eq!(v.verdict, Verdict::Strict);
        assert_eq!((v.quantities.lhs, v.quantities.rhs), (Some(2), 4));
    }

    #[test]
    fn k5_is_oracle_only() {
        let v = run(&complete(5));
        assert_eq!(v.verdict, Verdict::OracleOnly);
        assert_eq!((v.quantities.alpha, v.quantities.mu), (Some(1), 2));
        assert_eq!((v.quantities.lhs, v.quantities.rhs), (Some(4), 8));
    }

    #[test]
    fn low_degree_regular() {
        let v = run(&Graph::empty(3));
        assert_eq!(
            (v.verdict, v.quantities.alpha, v.quantities.mu),
            (Verdict::Tight, Some(3), 0)
        );
        let v = run(&path(2).disjoint_union(&path(2)));
        assert_eq!(
            (v.verdict, v.quantities.alpha, v.quantities.mu),
            (Verdict::Tight, Some(2), 2)
        );
    }

    #[test]
    fn cubic_cases() {
        let v = run(&complete_bipartite(3, 3));
        assert_eq!(v.verdict, Verdict::Tight);
        let v = run(&petersen());
        assert_eq!(v.verdict, Verdict::Strict);
        assert_eq!(
            v.evidence,
            Evidence::NotSpecial {
                component: (0..10).collect()
            }
        );
        let g = complete_bipartite(3, 3).disjoint_union(&complete(4));
        let v = run(&g);
        assert_eq!(v.verdict, Verdict::Strict);
        assert_eq!(
            v.evidence,
            Evidence::NotSpecial {
                component: vec![6, 7, 8, 9]
            }
        );
        let g = complete_bipartite(3, 3).disjoint_union(&complete_bipartite(3, 3));
        let v = run(&g);
        let Evidence::Special { components } = &v.evidence else {
            panic!()
        };
        assert_eq!(components.len(), 2);
        assert_eq!(
            components[1].decomposition.core,
            (6..12).collect::<Vec<_>>()
        );
    }

    #[test]
    fn tampering_detected() {
        let g = complete_bipartite(3, 3);
        let mut v = run(&g);
        v.quantities.mu = 2;
        assert!(!v.verify(&g));
        let mut v = run(&cycle(5));
        v.verdict = Verdict::Strict;
        assert!(!v.verify(&cycle(5)));
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(
            is_extremal(&Graph::empty(0), &OracleConfig::default()),
            Err(RecognitionError::EmptyGraph)
        );
    }
}
