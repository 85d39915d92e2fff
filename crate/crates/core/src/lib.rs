//! Recognizers and certificates for graphs attaining `δ(G)·α(G) ≤ Δ(G)·μ(G)`.
//!
//! The inequality itself is checked with exact oracles ([`exact`]) and a
//! blossom matching. Equality is decided structurally: for `δ < Δ` a graph is
//! extremal iff it is bipartite with its degree classes as sides, and a
//! connected cubic graph is extremal iff it splits into a bipartite core and
//! 2-connected [`bubbles`] ([`recognition::recognize_special`]).

pub mod bubbles;
pub mod census;
pub mod certificate;
pub mod exact;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod matching;
pub mod recognition;
pub mod structure;

pub use graph::{Graph, GraphError};
