//! Self-contained JSON certificate documents.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bubbles::{verify_bubble, BubbleCertificate};
use crate::formats::{parse_graph6, serialize_graph6};
use crate::graph::{Graph, GraphError};
use crate::matching::{blossom_maximum_matching, Matching};
use crate::recognition::{
    BiregularCertificate, BiregularFailure, CycleCover, Evidence, ExtremalReport, ExtremalVerdict,
    ProofTrace, Quantities, SpecialComponent, Verdict, WitnessPair,
};

pub const SCHEMA_VERSION: &str = "egk/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Edgeless,
    PerfectMatching { matching: Matching },
    Cycles { cover: CycleCover },
    Biregular { certificate: BiregularCertificate },
    BiregularFailure { failure: BiregularFailure },
    Special { components: Vec<SpecialComponent> },
    NotSpecial { component: Vec<usize> },
    Oracle { report: ExtremalReport },
    Inequality { report: ExtremalReport },
    Bubble { certificate: BubbleCertificate },
    Trace { trace: ProofTrace },
    Witness { pair: WitnessPair },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Edgeless => "edgeless",
            Certificate::PerfectMatching { .. } => "perfect-matching",
            Certificate::Cycles { .. } => "cycles",
            Certificate::Biregular { .. } => "biregular",
            Certificate::BiregularFailure { .. } => "biregular-failure",
            Certificate::Special { .. } => "special",
            Certificate::NotSpecial { .. } => "not-special",
            Certificate::Oracle { .. } => "oracle",
            Certificate::Inequality { .. } => "inequality",
            Certificate::Bubble { .. } => "bubble",
            Certificate::Trace { .. } => "trace",
            Certificate::Witness { .. } => "witness",
        }
    }

    fn as_evidence(&self) -> Option<Evidence> {
        Some(match self.clone() {
            Certificate::Edgeless => Evidence::Edgeless,
            Certificate::PerfectMatching { matching } => Evidence::PerfectMatching { matching },
            Certificate::Cycles { cover } => Evidence::Cycles { cover },
            Certificate::Biregular { certificate } => Evidence::Biregular { certificate },
            Certificate::BiregularFailure { failure } => Evidence::BiregularFailure { failure },
            Certificate::Special { components } => Evidence::Special { components },
            Certificate::NotSpecial { component } => Evidence::NotSpecial { component },
            Certificate::Oracle { report } => Evidence::Oracle { report },
            _ => return None,
        })
    }
}

impl From<Evidence> for Certificate {
    fn from(e: Evidence) -> Self {
        match e {
            Evidence::Edgeless => Certificate::Edgeless,
            Evidence::PerfectMatching { matching } => Certificate::PerfectMatching { matching },
            Evidence::Cycles { cover } => Certificate::Cycles { cover },
            Evidence::Biregular { certificate } => Certificate::Biregular { certificate },
            Evidence::BiregularFailure { failure } => Certificate::BiregularFailure { failure },
            Evidence::Special { components } => Certificate::Special { components },
            Evidence::NotSpecial { component } => Certificate::NotSpecial { component },
            Evidence::Oracle { report } => Certificate::Oracle { report },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("malformed certificate JSON: {0}")]
    Json(String),
    #[error("unsupported schema version {0:?}")]
    Schema(String),
    #[error("input graph: {0}")]
    Graph(#[from] GraphError),
    #[error("certificate does not check out: {0}")]
    Invalid(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema_version: String,
    /// The input graph in graph6.
    pub input: String,
    pub verdict: Verdict,
    pub quantities: Quantities,
    pub certificate: Certificate,
}

fn quantities(g: &Graph, alpha: Option<usize>, mu: usize) -> Quantities {
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

impl CertificateDocument {
    fn new(g: &Graph, verdict: Verdict, quantities: Quantities, certificate: Certificate) -> Self {
        CertificateDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            input: serialize_graph6(g),
            verdict,
            quantities,
            certificate,
        }
    }

    pub fn extremal(g: &Graph, v: ExtremalVerdict) -> Self {
        Self::new(g, v.verdict, v.quantities, v.evidence.into())
    }

    pub fn inequality(g: &Graph, report: ExtremalReport) -> Self {
        let verdict = if report.tight {
            Verdict::Tight
        } else {
            Verdict::Strict
        };
        Self::new(
            g,
            verdict,
            quantities(g, Some(report.alpha), report.mu),
            Certificate::Inequality { report },
        )
    }

    pub fn bubble(g: &Graph, certificate: BubbleCertificate) -> Self {
        let half = (g.n().saturating_sub(1)) / 2;
        Self::new(
            g,
            Verdict::NotApplicable,
            quantities(g, Some(half), half),
            Certificate::Bubble { certificate },
        )
    }

    pub fn trace(g: &Graph, trace: ProofTrace) -> Self {
        let verdict = if trace.bound_chain[0] == trace.bound_chain[3] {
            Verdict::Tight
        } else {
            Verdict::Strict
        };
        Self::new(
            g,
            verdict,
            quantities(g, Some(trace.alpha), trace.mu_g),
            Certificate::Trace { trace },
        )
    }

    /// An equal-size independent set and matching in a regular graph.
    pub fn witness(g: &Graph, pair: WitnessPair) -> Self {
        let size = pair.size();
        Self::new(
            g,
            Verdict::Tight,
            quantities(g, Some(size), size),
            Certificate::Witness { pair },
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        let doc: CertificateDocument =
            serde_json::from_str(text).map_err(|e| CertificateError::Json(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CertificateError::Schema(doc.schema_version));
        }
        Ok(doc)
    }

    /// Re-checks the certificate against the echoed input graph.
    pub fn verify(&self) -> Result<(), CertificateError> {
        use CertificateError::Invalid;
        if self.schema_version != SCHEMA_VERSION {
            return Err(CertificateError::Schema(self.schema_version.clone()));
        }
        let g = parse_graph6(&self.input)?;
        let q = &self.quantities;
        let mu = blossom_maximum_matching(&g).len();
        let expected = quantities(&g, q.alpha, mu);
        if *q != expected {
            return Err(Invalid("quantities do not match the input graph"));
        }
        if let Some(evidence) = self.certificate.as_evidence() {
            let v = ExtremalVerdict {
                verdict: self.verdict,
                quantities: q.clone(),
                evidence,
            };
            return if v.verify(&g) {
                Ok(())
            } else {
                Err(Invalid("extremal evidence fails"))
            };
        }
        let tight = q.lhs == Some(q.rhs);
        match &self.certificate {
            Certificate::Inequality { report } => {
                let consistent = report.delta == q.delta
                    && report.max_degree == q.max_degree
                    && Some(report.alpha) == q.alpha
                    && report.mu == mu
                    && report.lhs == q.delta * report.alpha
                    && report.rhs == q.rhs
                    && report.lhs <= report.rhs
                    && report.tight == tight
                    && self.verdict
                        == if tight {
                            Verdict::Tight
                        } else {
                            Verdict::Strict
                        };
                if !consistent {
                    return Err(Invalid("inequality report is inconsistent"));
                }
            }
            Certificate::Bubble { certificate } => {
                if !verify_bubble(&g, certificate).is_ok() || self.verdict != Verdict::NotApplicable
                {
                    return Err(Invalid("bubble certificate fails"));
                }
                if mu != (g.n() - 1) / 2 {
                    return Err(Invalid("bubble matching number is not (n-1)/2"));
                }
            }
            Certificate::Trace { trace } => {
                let verdict = if tight {
                    Verdict::Tight
                } else {
                    Verdict::Strict
                };
                if !trace.verify(&g) || q.alpha != Some(trace.alpha) || self.verdict != verdict {
                    return Err(Invalid("proof trace fails"));
                }
            }
            Certificate::Witness { pair } => {
                let regular = g.min_degree() == g.max_degree() && g.max_degree() > 0;
                if !regular
                    || !pair.verify(&g)
                    || pair.size() != mu
                    || q.alpha != Some(mu)
                    || self.verdict != Verdict::Tight
                {
                    return Err(Invalid("witness pair fails"));
                }
            }
            _ => unreachable!("evidence kinds handled above"),
        }
        Ok(())
    }
}
