use serde::{Deserialize, Serialize};

use super::RecognitionError;
use crate::graph::Graph;
use crate::structure::{connected_components, Bipartition};

/// One bipartition per component, `side_a` being the degree-`δ` side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiregularCertificate {
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
    pub components: Vec<Bipartition>,
}

impl BiregularCertificate {
    /// `α = |A|` and `μ = |B|` summed over the components.
    pub fn alpha(&self) -> usize {
        self.components.iter().map(|b| b.side_a.len()).sum()
    }

    pub fn mu(&self) -> usize {
        self.components.iter().map(|b| b.side_b.len()).sum()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        if self.delta >= self.max_degree
            || g.min_degree() != self.delta
            || g.max_degree() != self.max_degree
        {
            return false;
        }
        // (component index, is B-side) per vertex
        let mut place: Vec<Option<(usize, bool)>> = vec![None; g.n()];
        for (c, b) in self.components.iter().enumerate() {
            for (list, d, is_b) in [
                (&b.side_a, self.delta, false),
                (&b.side_b, self.max_degree, true),
            ] {
                for &v in list {
                    if v >= g.n() || place[v].is_some() || g.degree(v) != d {
                        return false;
                    }
                    place[v] = Some((c, is_b));
                }
            }
        }
        place.iter().all(Option::is_some)
            && g.edges().all(|(u, v)| {
                let (cu, bu) = place[u].unwrap();
                let (cv, bv) = place[v].unwrap();
                cu == cv && bu != bv
            })
    }
}

/// Why a graph with `δ < Δ` is not biregular-extremal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum BiregularFailure {
    /// A vertex whose degree is neither `δ` nor `Δ`.
    DegreeOutside { vertex: usize, degree: usize },
    /// An edge joining two vertices of the same degree class.
    SameClassEdge { u: usize, v: usize, degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BiregularOutcome {
    Extremal(BiregularCertificate),
    NotExtremal(BiregularFailure),
}

/// Decides whether `g` (with `δ < Δ`) is bipartite with every component
/// having one side of degree `δ` and the other of degree `Δ`.
///
/// When every vertex has degree `δ` or `Δ` and every edge joins the two
/// classes, the degree classes themselves are the bipartition.
pub fn recognize_biregular_extremal(g: &Graph) -> Result<BiregularOutcome, RecognitionError> {
    if g.n() == 0 {
        return Err(RecognitionError::EmptyGraph);
    }
    let (delta, max_degree) = (g.min_degree(), g.max_degree());
    if delta == max_degree {
        return Err(RecognitionError::EqualDegrees(delta));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != delta && g.degree(v) != max_degree) {
        return Ok(BiregularOutcome::NotExtremal(
            BiregularFailure::DegreeOutside {
                vertex: v,
                degree: g.degree(v),
            },
        ));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| g.degree(u) == g.degree(v)) {
        return Ok(BiregularOutcome::NotExtremal(
            BiregularFailure::SameClassEdge {
                u,
                v,
                degree: g.degree(u),
            },
        ));
    }
    // δ = 0 cannot reach this point: an isolated vertex forces a same-class edge or δ = Δ = 0
    let components = connected_components(g)
        .into_iter()
        .map(|comp| {
            let (a, b): (Vec<usize>, Vec<usize>) =
                comp.into_iter().partition(|&v| g.degree(v) == delta);
            Bipartition::new(a, b)
        })
        .collect();
    Ok(BiregularOutcome::Extremal(BiregularCertificate {
        delta,
        max_degree,
        components,
    }))
}
