use serde::{Deserialize, Serialize};

use super::RecognitionError;
use crate::bubbles::{
    bubble_matching_avoiding, recognize_bubble, verify_embedded_bubble, BubbleCertificate,
};
use crate::exact::{verify_independent, verify_matching, IndependentSet};
use crate::graph::Graph;
use crate::matching::{saturating_matching, Matching, Saturation, Side};
use crate::structure::{
    bipartition, block_cut_tree, is_connected, is_two_connected, Bipartition, Coloring,
};

/// A 2-connected bubble hanging off the core, in host vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialBubble {
    pub vertices: Vec<usize>,
    pub certificate: BubbleCertificate,
}

/// Bipartite core `(I₀, R₀)` plus 2-connected bubbles, each tied to an
/// `I₀` vertex by a bridge from its contact vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialDecomposition {
    pub core: Vec<usize>,
    pub core_i: Vec<usize>,
    pub core_r: Vec<usize>,
    pub bubbles: Vec<SpecialBubble>,
    /// `(contact, partner in I₀)`, parallel to `bubbles`.
    pub bridges: Vec<(usize, usize)>,
    pub ell: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialViolation {
    NotConnected,
    NotCubic,
    VertexOutOfRange(usize),
    NotAPartition,
    EmptyCore,
    CoreNotConnected,
    CoreSidesInvalid,
    CoreRDegree {
        vertex: usize,
        degree: usize,
    },
    InvalidBubble {
        index: usize,
    },
    BubbleNotTwoConnected {
        index: usize,
    },
    BubbleCount {
        ell: usize,
        bubbles: usize,
        deficiency: usize,
    },
    BridgeMismatch {
        index: usize,
    },
    NotABridge {
        index: usize,
    },
}

impl SpecialDecomposition {
    /// Checks every clause of the definition against `g`.
    pub fn violations(&self, g: &Graph) -> Vec<SpecialViolation> {
        use SpecialViolation::*;
        let n = g.n();
        let mut out = Vec::new();
        if !is_connected(g) {
            out.push(NotConnected);
        }
        if !g.is_regular(3) {
            out.push(NotCubic);
        }
        let all = self
            .core
            .iter()
            .chain(&self.core_i)
            .chain(&self.core_r)
            .chain(self.bubbles.iter().flat_map(|b| b.vertices.iter()))
            .chain(self.bridges.iter().flat_map(|(a, b)| [a, b]));
        if let Some(&v) = all.into_iter().find(|&&v| v >= n) {
            out.push(VertexOutOfRange(v));
            return out;
        }
        let mut owner = vec![0u8; n];
        for &v in self
            .core
            .iter()
            .chain(self.bubbles.iter().flat_map(|b| b.vertices.iter()))
        {
            owner[v] += 1;
        }
        if owner.iter().any(|&c| c != 1) {
            out.push(NotAPartition);
        }

        if self.core.is_empty() {
            out.push(EmptyCore);
        }
        let core = g.induced_subgraph(&self.core);
        if !is_connected(&core.graph) {
            out.push(CoreNotConnected);
        }
        let mut sides: Vec<usize> = self.core_i.iter().chain(&self.core_r).copied().collect();
        sides.sort_unstable();
        let local_sides = (core.map_to_new(&self.core_i), core.map_to_new(&self.core_r));
        match local_sides {
            (Some(li), Some(lr)) if sides == self.core => {
                if !Bipartition::new(li, lr).is_valid_for(&core.graph) {
                    out.push(CoreSidesInvalid);
                }
            }
            _ => out.push(CoreSidesInvalid),
        }
        let core_degree = |v: usize| core.to_new[v].map_or(0, |l| core.graph.degree(l));
        for &v in &self.core_r {
            if core_degree(v) != 3 {
                out.push(CoreRDegree {
                    vertex: v,
                    degree: core_degree(v),
                });
            }
        }
        let deficiency: usize = self
            .core_i
            .iter()
            .map(|&v| 3usize.saturating_sub(core_degree(v)))
            .sum();
        if self.ell != self.bubbles.len()
            || self.ell != deficiency
            || self.bridges.len() != self.ell
        {
            out.push(BubbleCount {
                ell: self.ell,
                bubbles: self.bubbles.len(),
                deficiency,
            });
        }

        let tree = block_cut_tree(g);
        let bridges: Vec<(usize, usize)> = tree.bridges().collect();
        for (index, b) in self.bubbles.iter().enumerate() {
            if b.certificate.vertices() != b.vertices
                || !verify_embedded_bubble(g, &b.certificate).is_ok()
            {
                out.push(InvalidBubble { index });
                continue;
            }
            if !is_two_connected(&g.induced_subgraph(&b.vertices).graph) {
                out.push(BubbleNotTwoConnected { index });
            }
            let Some(&(z, partner)) = self.bridges.get(index) else {
                continue;
            };
            if z != b.certificate.contact || self.core_i.binary_search(&partner).is_err() {
                out.push(BridgeMismatch { index });
            } else if !bridges.contains(&(z.min(partner), z.max(partner))) {
                out.push(NotABridge { index });
            }
        }
        out
    }

    pub fn verify(&self, g: &Graph) -> bool {
        self.violations(g).is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.core.len() + self.bubbles.iter().map(|b| b.vertices.len()).sum::<usize>()
    }

    /// Relabels every vertex; `map` must be injective.
    pub fn map_vertices(&self, map: impl Fn(usize) -> usize) -> Self {
        let set = |vs: &[usize]| {
            let mut out: Vec<usize> = vs.iter().map(|&v| map(v)).collect();
            out.sort_unstable();
            out
        };
        SpecialDecomposition {
            core: set(&self.core),
            core_i: set(&self.core_i),
            core_r: set(&self.core_r),
            bubbles: self
                .bubbles
                .iter()
                .map(|b| SpecialBubble {
                    vertices: set(&b.vertices),
                    certificate: b.certificate.map_vertices(&map),
                })
                .collect(),
            bridges: self
                .bridges
                .iter()
                .map(|&(z, p)| (map(z), map(p)))
                .collect(),
            ell: self.ell,
        }
    }

    /// `|I₀| + Σ (n_i − 1)/2`, the common value of `α` and `μ`.
    pub fn witness_size(&self) -> usize {
        self.core_i.len()
            + self
                .bubbles
                .iter()
                .map(|b| (b.vertices.len() - 1) / 2)
                .sum::<usize>()
    }
}

/// Decomposes a connected cubic graph into a bipartite core and 2-connected
/// bubbles, or returns `None` if no such decomposition exists.
///
/// Bipartite inputs are their own core. Otherwise every non-bipartite block
/// must be a bubble whose contact is the block's only cut vertex; what remains
/// must be a connected bipartite core whose degree-deficient vertices all lie
/// on one side, which becomes `I₀`.
pub fn recognize_special(g: &Graph) -> Result<Option<SpecialDecomposition>, RecognitionError> {
    if g.n() == 0 {
        return Err(RecognitionError::EmptyGraph);
    }
    if !is_connected(g) {
        return Err(RecognitionError::NotConnected);
    }
    if !g.is_regular(3) {
        return Err(RecognitionError::NotCubic);
    }
    if let Coloring::Bipartite(b) = bipartition(g) {
        return Ok(Some(SpecialDecomposition {
            core: (0..g.n()).collect(),
            core_i: b.side_a,
            core_r: b.side_b,
            bubbles: Vec::new(),
            bridges: Vec::new(),
            ell: 0,
        }));
    }

    let tree = block_cut_tree(g);
    let mut bubbles = Vec::new();
    let mut in_bubble = vec![false; g.n()];
    for (idx, block) in tree.blocks.iter().enumerate() {
        let sub = g.induced_subgraph(&block.vertices);
        if crate::structure::is_bipartite(&sub.graph) {
            continue;
        }
        let cuts = tree.cut_vertices_of(idx);
        let [z] = cuts[..] else { return Ok(None) };
        let local_z = sub.to_new[z].unwrap();
        if sub.graph.degree(local_z) != 2 {
            return Ok(None);
        }
        let Some(cert) = recognize_bubble(&sub.graph)? else {
            return Ok(None);
        };
        if cert.contact != local_z {
            return Ok(None);
        }
        for &v in &block.vertices {
            in_bubble[v] = true;
        }
        bubbles.push(SpecialBubble {
            vertices: block.vertices.clone(),
            certificate: cert.map_vertices(|v| sub.to_old[v]),
        });
    }

    let core: Vec<usize> = (0..g.n()).filter(|&v| !in_bubble[v]).collect();
    if core.is_empty() {
        return Ok(None);
    }
    let sub = g.induced_subgraph(&core);
    if !is_connected(&sub.graph) {
        return Ok(None);
    }
    let Coloring::Bipartite(sides) = bipartition(&sub.graph) else {
        return Ok(None);
    };
    let deficient = |v: &usize| sub.graph.degree(*v) < 3;
    let (core_i, core_r) = if sides.side_b.iter().all(|v| !deficient(v)) {
        (sides.side_a, sides.side_b)
    } else if sides.side_a.iter().all(|v| !deficient(v)) {
        (sides.side_b, sides.side_a)
    } else {
        return Ok(None);
    };
    let core_i = sub.map_to_old(&core_i);
    let core_r = sub.map_to_old(&core_r);

    let mut bridges = Vec::new();
    for b in &bubbles {
        let z = b.certificate.contact;
        let partner = g
            .neighbors(z)
            .iter()
            .copied()
            .find(|w| b.vertices.binary_search(w).is_err())
            .expect("contact has one neighbor outside its block");
        if core_i.binary_search(&partner).is_err() {
            return Ok(None);
        }
        bridges.push((z, partner));
    }
    let decomposition = SpecialDecomposition {
        ell: bubbles.len(),
        core,
        core_i,
        core_r,
        bubbles,
        bridges,
    };
    // the remaining clauses (R₀ degrees, the count of bubbles) are checked here
    let violations = decomposition.violations(g);
    if violations.is_empty() {
        Ok(Some(decomposition))
    } else if violations.iter().all(|v| {
        matches!(
            v,
            SpecialViolation::CoreRDegree { .. } | SpecialViolation::BubbleCount { .. }
        )
    }) {
        Ok(None)
    } else {
        Err(RecognitionError::Inconsistent(format!(
            "recognized decomposition fails its own check: {violations:?}"
        )))
    }
}

/// An independent set and a matching of the same size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub independent_set: IndependentSet,
    pub matching: Matching,
}

impl WitnessPair {
    pub fn size(&self) -> usize {
        self.independent_set.len()
    }

    pub fn map_vertices(&self, map: impl Fn(usize) -> usize) -> Self {
        WitnessPair {
            independent_set: IndependentSet::new(
                self.independent_set
                    .vertices
                    .iter()
                    .map(|&v| map(v))
                    .collect(),
            ),
            matching: self.matching.map_vertices(map),
        }
    }

    pub fn verify(&self, g: &Graph) -> bool {
        verify_independent(g, &self.independent_set)
            && verify_matching(g, &self.matching)
            && self.independent_set.len() == self.matching.len()
    }
}

/// Builds `I = I₀ ∪ I₁ ∪ ... ∪ I_ℓ` and a matching of the same size: an
/// `I₀`-saturating matching of `G[V₀ ∪ {z₁, ..., z_ℓ}]` plus, in every
/// bubble, an `I_i`-saturating matching avoiding the contact.
pub fn build_witnesses(
    g: &Graph,
    d: &SpecialDecomposition,
) -> Result<WitnessPair, RecognitionError> {
    let violations = d.violations(g);
    if !violations.is_empty() {
        return Err(RecognitionError::InvalidDecomposition(violations));
    }
    let mut independent: Vec<usize> = d.core_i.clone();
    for b in &d.bubbles {
        independent.extend(&b.certificate.i_part);
    }
    let independent_set = IndependentSet::new(independent);

    let contacts: Vec<usize> = d.bridges.iter().map(|&(z, _)| z).collect();
    let outer: Vec<usize> = d.core.iter().chain(&contacts).copied().collect();
    let sub = g.induced_subgraph(&outer);
    let right: Vec<usize> = d.core_r.iter().chain(&contacts).copied().collect();
    let bip = Bipartition::new(
        sub.map_to_new(&d.core_i).expect("core vertices are kept"),
        sub.map_to_new(&right).expect("core and contacts are kept"),
    );
    let core_matching = match saturating_matching(&sub.graph, &bip, Side::A)? {
        Saturation::Saturating(m) => m.map_vertices(|v| sub.to_old[v]),
        Saturation::Violated(v) => {
            return Err(RecognitionError::Inconsistent(format!(
                "core side I₀ is not saturable: {v:?}"
            )))
        }
    };
    let mut parts = vec![core_matching];
    for b in &d.bubbles {
        let sub = g.induced_subgraph(&b.vertices);
        let local = b.certificate.map_vertices(|v| sub.to_new[v].unwrap());
        let m = bubble_matching_avoiding(&sub.graph, &local, local.contact)?;
        parts.push(m.map_vertices(|v| sub.to_old[v]));
    }
    let pair = WitnessPair {
        independent_set,
        matching: Matching::union(parts),
    };
    if !pair.verify(g) || pair.size() != d.witness_size() {
        return Err(RecognitionError::Inconsistent(format!(
            "witnesses of sizes {} and {} do not certify α = μ",
            pair.independent_set.len(),
            pair.matching.len()
        )));
    }
    Ok(pair)
}
