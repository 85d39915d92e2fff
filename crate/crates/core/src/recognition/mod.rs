//! Executable forms of the inequality `δ·α ≤ Δ·μ` and of the two
//! characterizations of graphs attaining it.

mod biregular;
mod extremal;
mod inequality;
mod special;

pub use biregular::{
    recognize_biregular_extremal, BiregularCertificate, BiregularFailure, BiregularOutcome,
};
pub use extremal::{
    is_extremal, CycleCover, Evidence, ExtremalVerdict, Quantities, SpecialComponent, Verdict,
};
pub use inequality::{
    check_inequality, proof_trace, ExtremalReport, ProofTrace, MU_CROSSCHECK_BOUND,
};
pub use special::{
    build_witnesses, recognize_special, SpecialBubble, SpecialDecomposition, SpecialViolation,
    WitnessPair,
};

use thiserror::Error;

use crate::bubbles::BubbleError;
use crate::exact::OracleError;
use crate::matching::MatchingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("the graph is not connected")]
    NotConnected,
    #[error("the graph is not cubic")]
    NotCubic,
    #[error("biregular recognition needs δ < Δ, got δ = Δ = {0}")]
    EqualDegrees(usize),
    #[error("supplied set is not independent")]
    NotIndependent,
    #[error("supplied independent set has {given} vertices but α = {alpha}")]
    NotMaximum { given: usize, alpha: usize },
    #[error("invalid special decomposition: {0:?}")]
    InvalidDecomposition(Vec<SpecialViolation>),
    #[error("inequality violated: δα = {lhs} > Δμ = {rhs}")]
    InequalityViolated { lhs: usize, rhs: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Bubble(#[from] BubbleError),
}
