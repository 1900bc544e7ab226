//! Decision procedures for the matching poset and its permutation mirror.
//!
//! The crate is organised around four layers:
//!
//! * [`matching`]: matchings on `1..`, the four move kinds, the lex total order
//!   on matchings, intertwined matchings and their word encoding.
//! * [`permutation`]: permutations and words, pattern containment, Type II
//!   swaps, single-letter insertions, Bruhat swap closure and rewrite rules.
//! * [`graph`]: inversion graphs, the Koh–Ree characterisation, canonical
//!   forms for small graphs, fork graphs and their permutations.
//! * [`engine`]: certificate-producing reachability search on both sides,
//!   certificate replay and antichain checks.
//!
//! [`cli`] and [`suite`] sit on top and back the `matchposet` binary.

pub mod cli;
pub mod engine;
pub mod graph;
pub mod matching;
pub mod permutation;
pub mod suite;

pub use engine::{Certificate, MoveSet, Outcome, SearchReport};
pub use graph::{LabeledGraph, UnlabeledGraph};
pub use matching::{Matching, MoveKind};
pub use permutation::{Permutation, RewriteRule, Word};
