//! Symbolic dynamics on small alphabets, organized around the words a
//! sequence avoids rather than the ones it contains.
//!
//! The pipeline: a [`words::SequenceSpec`] names an infinite word (a
//! primitive-morphism fixed point, a periodic word, or an explicit
//! prefix); [`factors::extract_factors`] materializes its factor
//! language stratified by length, certifying saturation by prefix
//! doubling; [`obstructions`] enumerates minimal forbidden words and
//! their cogrowth count; [`rauzy`] builds the order-k factor graphs and
//! replays their evolution as pruned line digraphs. The [`digraph`]
//! module carries the graph machinery that drives it: line-digraph
//! iterates with an explicit walk correspondence, strong connectivity,
//! and the entropy regulator. [`verify`] turns the structural claims
//! behind all of this into executable checks on reproducible corpora
//! and builtin sequences.
//!
//! Everything is deterministic: strata are sorted, graph ids follow
//! insertion order, corpora derive per-item seeds from a corpus seed,
//! and reports serialize to stable JSON. Corpus runners execute in
//! parallel by default; the `parallel` feature (on by default) can be
//! dropped to force sequential builds, and [`Exec::Sequential`] selects
//! sequential execution at runtime for comparisons.

pub mod digraph;
pub mod error;
mod exec;
pub mod factors;
pub mod obstructions;
pub mod rauzy;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use exec::Exec;
